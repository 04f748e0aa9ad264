import numpy as np
import pytest

from hermlift.code import build_code, encode, random_message
from hermlift.recovery import (
    NotARecoverySet,
    erasure_simulation,
    exhaustive_recovery_check,
    recover_symbol,
    recovery_sets,
)

from conftest import curve, field


@pytest.fixture(scope="module")
def code3():
    return build_code(field(3, 1), "lifted-oracle", curve=curve(3, 1))


def test_sets_shape_q3(H3):
    q = 3
    for i in range(len(H3)):
        sets = recovery_sets(H3, i)
        assert len(sets) == q * q - 1
        flat = [j for s in sets for j in s.indices]
        assert all(len(s.indices) == q for s in sets)
        assert i not in flat
        assert len(set(flat) | {i}) == 1 + (q * q - 1) * q
        for s in sets:
            assert sorted(H3.points_on(s.alpha, s.beta)) == sorted(s.indices + (i,))


def test_trivial_codewords(code3):
    zero = np.zeros(27, dtype=np.int64)
    ones = np.ones(27, dtype=np.int64)
    for i in (0, 13, 26):
        for s in recovery_sets(code3.curve, i):
            assert recover_symbol(zero, i, s, code3) == 0
            assert recover_symbol(ones, i, s, code3) == 1


def test_erased_symbol_is_not_read(code3):
    word = encode(code3, random_message(code3, np.random.default_rng(0)))
    damaged = word.copy()
    damaged[5] = 7 - word[5] if word[5] != 7 else 0
    for s in recovery_sets(code3.curve, 5):
        assert recover_symbol(damaged, 5, s, code3) == word[5]


def test_exhaustive_repair_q3(code3):
    rep = exhaustive_recovery_check(code3, 20, seed=1)
    assert rep["failed"] == 0
    assert rep["repaired"] == 20 * 27 * 8
    assert isinstance(rep["repaired"], int)


def test_rejects_foreign_set(code3):
    with pytest.raises(NotARecoverySet):
        recover_symbol(np.zeros(27, dtype=np.int64), 0, [1, 2, 3], code3)


def test_single_erasure_all_sets(code3):
    rep = erasure_simulation(code3, 50, seed=4)
    assert not rep.failures and rep.skipped == 0
    assert rep.per_set_success == [50] * 8


def test_every_set_hit_is_skip_not_failure(code3):
    rep = erasure_simulation(code3, 20, seed=9, erasures=27)
    assert not rep.failures
    assert rep.repairs == 0 and rep.skipped == 20 * 27 * 8


def test_simulation_deterministic(code3):
    a = erasure_simulation(code3, 30, seed=12, erasures=3).to_dict()
    b = erasure_simulation(code3, 30, seed=12, erasures=3).to_dict()
    assert a == b


def test_simulation_rejects_bad_arguments(code3):
    with pytest.raises(ValueError):
        erasure_simulation(code3, 0, seed=1)
    with pytest.raises(ValueError):
        erasure_simulation(code3, 1, seed=1, erasures=28)


def test_onepoint_code_also_repairs():
    code = build_code(field(2, 2), "onepoint", 15, curve=curve(2, 2))
    rep = erasure_simulation(code, 20, seed=2)
    assert not rep.failures and rep.repairs == 20 * 15
