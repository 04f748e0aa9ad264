"""Local erasure repair along curve/line intersections.

Every position has q^2 - 1 recovery sets of q positions each, one per
non-tangent line through its point.  A lost symbol is the value at t = y_i
of the degree < q polynomial interpolating the q surviving symbols.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field as dc_field

import numpy as np

from .code import HermitianCode, encode, random_message
from .curve import HermitianCurve, make_line
from .polyring import lagrange_interpolate

__all__ = [
    "NotARecoverySet",
    "RecoverySet",
    "ErasureReport",
    "recovery_sets",
    "recovery_plan",
    "recover_symbol",
    "erasure_simulation",
    "exhaustive_recovery_check",
]


class NotARecoverySet(ValueError):
    pass


@dataclass(frozen=True)
class RecoverySet:
    alpha: int
    beta: int
    indices: tuple[int, ...]


def recovery_sets(curve: HermitianCurve, index: int) -> list[RecoverySet]:
    """The q^2 - 1 disjoint recovery sets of position ``index``, by alpha."""
    F = curve.field
    q = curve.q
    P = curve.points[index]
    out = []
    for alpha in F.elements():
        beta = F.sub(P.x, F.mul(alpha, P.y))
        on_line = curve.points_on(alpha, beta)
        line = make_line(F, alpha, beta)
        if line.tangent:
            if on_line != [index]:
                raise AssertionError(f"tangent line {line.key} meets the curve in {len(on_line)} points")
            continue
        if len(on_line) != q + 1:
            raise AssertionError(f"secant line {line.key} meets the curve in {len(on_line)} points")
        out.append(RecoverySet(alpha, beta, tuple(j for j in on_line if j != index)))
    return out


def recovery_plan(curve: HermitianCurve) -> list[list[RecoverySet]]:
    return [recovery_sets(curve, i) for i in range(len(curve))]


def recover_symbol(codeword, i: int, rset, code: HermitianCode, check: bool = True) -> int:
    """Recompute symbol ``i`` of ``codeword`` from the positions in ``rset``.

    ``codeword[i]`` is never read.  ``rset`` is a :class:`RecoverySet` or a
    plain collection of indices; with ``check`` it must be one of the
    recovery sets of ``i``.
    """
    curve = code.curve
    F = code.field
    idx = tuple(rset.indices if isinstance(rset, RecoverySet) else sorted(rset))
    if check:
        valid = {tuple(sorted(s.indices)) for s in recovery_sets(curve, i)}
        if tuple(sorted(idx)) not in valid:
            raise NotARecoverySet(f"{idx} is not a recovery set of position {i}")
    ys = curve.ys
    samples = [(int(ys[j]), int(codeword[j])) for j in idx]
    if len({t for t, _ in samples} | {int(ys[i])}) != len(samples) + 1:
        raise AssertionError("repeated y-coordinate on a line of the family")
    g = lagrange_interpolate(F, samples)
    return g(int(ys[i]))


@dataclass
class ErasureReport:
    seed: int
    trials: int
    erasures: int
    positions_tested: int = 0
    repairs: int = 0
    skipped: int = 0
    per_set_success: list = dc_field(default_factory=list)
    failures: list = dc_field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def erasure_simulation(code: HermitianCode, trials: int, seed: int, erasures: int = 1) -> ErasureReport:
    """Seeded erasure trials.

    Each trial encodes a random message, erases ``erasures`` distinct
    positions and repairs every erased position through each of its
    recovery sets.  Sets containing another erased position are skipped
    and counted, never reported as failures.  Slot ``s`` of
    ``per_set_success`` counts repairs through the s-th set, sets being
    ordered by alpha.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = code.n
    if not 1 <= erasures <= n:
        raise ValueError(f"erasures must lie in 1..{n}")
    rng = np.random.default_rng(seed)
    q = code.field.q
    report = ErasureReport(seed, trials, erasures, per_set_success=[0] * (q * q - 1))
    plan = {}
    for trial in range(trials):
        word = encode(code, random_message(code, rng))
        erased = sorted(rng.choice(n, size=erasures, replace=False).tolist())
        lost = set(erased)
        damaged = word.copy()
        damaged[erased] = -1
        for i in erased:
            report.positions_tested += 1
            if i not in plan:
                plan[i] = recovery_sets(code.curve, i)
            for s, rset in enumerate(plan[i]):
                if lost.intersection(rset.indices):
                    report.skipped += 1
                    continue
                got = recover_symbol(damaged, i, rset, code, check=False)
                report.repairs += 1
                if got == word[i]:
                    report.per_set_success[s] += 1
                else:
                    report.failures.append(
                        {"trial": trial, "position": i, "set": s, "expected": int(word[i]), "got": int(got)}
                    )
    return report


def exhaustive_recovery_check(code: HermitianCode, codewords: int, seed: int) -> dict:
    """Erase every position of ``codewords`` random codewords in turn and
    repair it through every recovery set."""
    rng = np.random.default_rng(seed)
    plan = recovery_plan(code.curve)
    repaired = failed = 0
    for _ in range(codewords):
        word = encode(code, random_message(code, rng))
        for i, sets in enumerate(plan):
            damaged = word.copy()
            damaged[i] = -1
            for rset in sets:
                ok = recover_symbol(damaged, i, rset, code, check=False) == word[i]
                repaired += int(ok)
                failed += int(not ok)
    return {"codewords": codewords, "seed": seed, "repaired": repaired, "failed": failed}
