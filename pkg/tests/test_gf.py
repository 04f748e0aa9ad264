import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hermlift.gf import GF, NonPrimeError, field_create, is_prime, least_irreducible

from conftest import field

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)]


def test_f9_modulus_is_z2_plus_1(F9):
    assert F9.modulus == [1, 0, 1]
    assert F9.order == 9 and F9.q == 3


def test_f81_modulus_pinned(F81):
    # z^4 + z + 2, checked irreducible by sympy and least by exhaustive search
    assert F81.modulus == [2, 1, 0, 0, 1]
    z = sympy.symbols("z")
    poly = sympy.Poly(list(reversed(F81.modulus)), z, modulus=3)
    assert poly.is_irreducible


@pytest.mark.parametrize("p,n", [(2, 2), (2, 4), (3, 2), (3, 4), (5, 2), (7, 2), (2, 6)])
def test_least_irreducible_matches_sympy_search(p, n):
    z = sympy.symbols("z")
    for v in range(p**n):
        c = [(v // p**i) % p for i in range(n)] + [1]
        if sympy.Poly(list(reversed(c)), z, modulus=p).is_irreducible:
            break
    assert least_irreducible(p, n) == c


def test_non_prime_rejected():
    with pytest.raises(NonPrimeError):
        field_create(4, 1)
    assert not is_prime(1) and is_prime(2) and not is_prime(9)


def test_element_order(F9, F81):
    assert list(F9.elements())[:2] == [0, 1]
    assert len(set(F81.elements())) == 81


@pytest.mark.parametrize("p,l", SMALL)
def test_tables_match_schoolbook_exhaustive(p, l):
    F = field(p, l)
    for x in F.elements():
        assert F.neg(x) == F.neg_schoolbook(x)
        if x:
            assert F.inv(x) == F.inv_schoolbook(x)
        for y in F.elements():
            assert F.add(x, y) == F.add_schoolbook(x, y)
            assert F.mul(x, y) == F.mul_schoolbook(x, y)


def test_inverses_f9(F9):
    for x in range(1, 9):
        assert F9.mul(x, F9.inv(x)) == 1


def test_frobenius_trace_norm_f9(F9):
    z = 3
    assert F9.frobenius(z) == F9.neg(z) == 6
    assert F9.trace(z) == 0
    assert F9.norm(z) == 1
    assert F9.trace(1) == 2
    for x in F9.elements():
        assert F9.frobenius(F9.frobenius(x)) == x
    for x in range(3):
        assert F9.frobenius(x) == x


@pytest.mark.parametrize("p,l", [(3, 1), (2, 2), (3, 2)])
def test_trace_and_norm_land_in_subfield(p, l):
    F = field(p, l)
    sub = set(F.subfield())
    assert len(sub) == F.q
    for x in F.elements():
        assert F.trace(x) in sub and F.norm(x) in sub


def test_vectorized_agrees_with_scalar(F81):
    rng = np.random.default_rng(5)
    x = rng.integers(0, 81, 500)
    y = rng.integers(0, 81, 500)
    e = rng.integers(0, 200, 500)
    F = F81
    assert F.vadd(x, y).tolist() == [F.add(a, b) for a, b in zip(x.tolist(), y.tolist())]
    assert F.vsub(x, y).tolist() == [F.sub(a, b) for a, b in zip(x.tolist(), y.tolist())]
    assert F.vmul(x, y).tolist() == [F.mul(a, b) for a, b in zip(x.tolist(), y.tolist())]
    assert F.vpow(x, e).tolist() == [F.pow(a, b) for a, b in zip(x.tolist(), e.tolist())]
    nz = x[x != 0]
    assert F.vinv(nz).tolist() == [F.inv(a) for a in nz.tolist()]


def test_schoolbook_only_field_agrees():
    F = GF(3, 2, tables=False)
    T = field(3, 1)
    for x in range(9):
        for y in range(9):
            assert F.mul_schoolbook(x, y) == T.mul(x, y)


elems81 = st.integers(0, 80)


@settings(max_examples=300, deadline=None)
@given(elems81, elems81, elems81)
def test_field_axioms(x, y, w):
    F = field(3, 2)
    assert F.add(x, y) == F.add(y, x)
    assert F.mul(x, F.add(y, w)) == F.add(F.mul(x, y), F.mul(x, w))
    assert F.mul(F.mul(x, y), w) == F.mul(x, F.mul(y, w))
    assert F.sub(F.add(x, y), y) == x
    if y:
        assert F.mul(F.div(x, y), y) == x


@settings(max_examples=200, deadline=None)
@given(elems81, elems81)
def test_frobenius_is_additive_and_multiplicative(x, y):
    F = field(3, 2)
    assert F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y))
    assert F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y))
    assert F.pow(x, F.order) == x
