"""Exact verification sweeps for the curve facts and the good-monomial lemmas.

Each sweep returns a :class:`CheckResult`.  Sweeps are exhaustive while the
field stays within the desk-scale guard; beyond it they raise
:class:`GuardError` unless ``force`` is set, in which case they fall back to
seeded sampling and say so in ``scope``.

Everything derived from the intersection polynomial depends on a line only
through (alpha, gamma), so "every non-tangent line" is covered by every
non-tangent (alpha, gamma) pair.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .code import build_code, evaluation_matrix, onepoint_basis, rank
from .curve import (
    HermitianCurve,
    intersection_count,
    line_pairs,
    line_poly,
    line_roots,
    make_line,
)
from .gf import GF
from .liftcrit import (
    LineSweep,
    ReductionTable,
    _b_entry,
    b_matrix,
    digit_condition_k,
    gamma_matrix,
    good_monomials,
    is_good_naive,
    kronecker_chain,
    last_column_formula,
    last_row_formula,
    rate_bound,
    power_sums_direct,
    power_sums_recurrence,
    sufficient_condition,
)
from .polyring import UniPoly

__all__ = ["GuardError", "CheckResult", "LINE_LIMIT", "verify_lemmas", "secant_line_for"]

LINE_LIMIT = 20_000  # q^4 lines swept exhaustively up to this many
SAMPLE = 200


class GuardError(RuntimeError):
    pass


@dataclass
class CheckResult:
    id: str
    scope: str
    checked: int
    violations: int
    status: str  # "pass", "fail" or "skipped"
    note: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return asdict(self)


def _result(cid, scope, checked, violations, note=""):
    return CheckResult(cid, scope, checked, violations, "pass" if violations == 0 else "fail", note)


def secant_line_for(field: GF, alpha: int, gamma: int):
    """Some line with the given (alpha, gamma); beta is the least element with trace gamma."""
    F = field
    for beta in F.elements():
        if F.trace(beta) == gamma:
            return make_line(F, alpha, beta)
    raise ValueError(f"{gamma} is not in the subfield")


class _Context:
    def __init__(self, field, force, seed):
        F = field
        self.field = F
        self.q = F.q
        self.exhaustive = self.q**4 <= LINE_LIMIT
        if not self.exhaustive and not force:
            raise GuardError(
                f"q^4 = {self.q ** 4} lines exceeds the exhaustive limit {LINE_LIMIT}; pass force to sample"
            )
        self.rng = np.random.default_rng(seed)
        self.scope = "exhaustive" if self.exhaustive else f"sampled({SAMPLE})"
        pairs = line_pairs(F)
        if not self.exhaustive:
            pick = self.rng.choice(len(pairs), size=min(SAMPLE, len(pairs)), replace=False)
            pairs = [pairs[i] for i in sorted(pick.tolist())]
        self.pairs = pairs
        self.lines = [secant_line_for(F, a, g) for a, g in pairs]
        self.kmax = self.q * self.q + self.q
        self._sums = {}
        self.table = ReductionTable(F) if self.exhaustive else ReductionTable(F, pairs=pairs)

    def sums(self, line):
        key = (line.alpha, line.gamma)
        if key not in self._sums:
            self._sums[key] = power_sums_direct(line, self.kmax)
        return self._sums[key]

    def deg_tk(self, line, k):
        return self.table.degree(line.alpha, line.gamma, k)


def check_point_count(ctx):
    n = len(HermitianCurve(ctx.field))
    return _result("point-count", "exhaustive", 1, int(n != ctx.q**3), f"{n} points")


def check_intersections(ctx):
    F = ctx.field
    q = ctx.q
    bad = checked = 0
    if ctx.exhaustive:
        lines = (make_line(F, a, b) for a in F.elements() for b in F.elements())
    else:
        ab = ctx.rng.integers(0, F.order, size=(SAMPLE, 2)).tolist()
        lines = (make_line(F, a, b) for a, b in ab)
    for line in lines:
        n = intersection_count(line)
        checked += 1
        bad += n not in (1, q + 1) or (n == 1) != line.tangent
    return _result("fact-intersection", ctx.scope, checked, bad, "counts in {1, q+1}; 1 iff gamma = alpha^(q+1)")


def check_root_identities(ctx):
    """Factored form, derivative identity and (s^q + a)(s + a^q) = a^(q+1) - g."""
    F = ctx.field
    q = ctx.q
    bad = 0
    for line in ctx.lines:
        roots = line_roots(line)
        prod = UniPoly(F, [1])
        for s in roots:
            prod = prod * UniPoly(F, [F.neg(s), 1])
        bad += prod != line_poly(line)
        a, g = line.alpha, line.gamma
        rhs = F.sub(F.pow(a, q + 1), g)
        for s in roots:
            d = 1
            for s2 in roots:
                if s2 != s:
                    d = F.mul(d, F.sub(s, s2))
            bad += d != F.add(F.frobenius(s), a)
            bad += F.mul(F.add(F.frobenius(s), a), F.add(s, F.frobenius(a))) != rhs
    return _result("root-identities", ctx.scope, len(ctx.lines), bad)


def check_locality(ctx, curve):
    from .recovery import recovery_sets

    q = ctx.q
    if ctx.exhaustive:
        idx = range(len(curve))
    else:
        idx = sorted(ctx.rng.choice(len(curve), size=min(SAMPLE, len(curve)), replace=False).tolist())
    bad = checked = 0
    for i in idx:
        sets = recovery_sets(curve, i)
        checked += 1
        flat = [j for s in sets for j in s.indices]
        bad += len(sets) != q * q - 1 or any(len(s.indices) != q for s in sets)
        bad += len(set(flat)) != len(flat) or i in flat
    return _result("locality-availability", ctx.scope, checked, bad, "q^2-1 disjoint sets of size q")


def check_degree_criterion(ctx):
    F = ctx.field
    q = ctx.q
    bad = checked = 0
    for line in ctx.lines:
        P = ctx.sums(line)
        naq = F.neg(F.frobenius(line.alpha))
        for k in range(q * q + 1):
            lhs = ctx.deg_tk(line, k) < q
            rhs = P[k + 1] == F.mul(naq, P[k])
            bad += lhs != rhs
            checked += 1
    return _result("degree-iff-power-sum", ctx.scope, checked, bad)


def check_power_sums(ctx):
    F = ctx.field
    q = ctx.q
    bad_closed = bad_rec = 0
    for line in ctx.lines:
        P = ctx.sums(line)
        a = line.alpha
        for k in range(q):
            s = 1 if k % 2 == 0 else F.p - 1
            bad_closed += P[k] != F.mul(s, F.pow(a, q * k))
            bad_closed += P[k * q] != F.mul(s, F.pow(a, k))
        bad_rec += power_sums_recurrence(line, ctx.kmax).values != P.values
    return [
        _result("power-sum-closed-forms", ctx.scope, len(ctx.lines), bad_closed),
        _result("power-sum-recurrence", ctx.scope, len(ctx.lines), bad_rec, f"direct vs recurrence up to k = {ctx.kmax}"),
    ]


def _block_relation_violations(M, a, g, F):
    aq = F.frobenius(a)
    bad = 0
    for r in range(len(M) - 1):
        for c in range(len(M[0]) - 1):
            want = F.neg(F.add(F.add(F.mul(aq, M[r][c + 1]), F.mul(a, M[r + 1][c])), F.mul(g, M[r][c])))
            bad += M[r + 1][c + 1] != want
    return bad


def check_b_matrices(ctx):
    """Entry formula: boundary row/column, 2x2 relation, and the closed forms
    of the last row and column."""
    F = ctx.field
    p = F.p
    bad4 = bad5 = 0
    for line in ctx.lines:
        a, g = line.alpha, line.gamma
        B = [[_b_entry(i, j, a, g, F) for j in range(1, p + 1)] for i in range(1, p + 1)]
        neg = F.neg(1)
        bad4 += B[0] != [F.pow(F.mul(neg, a), j) for j in range(p)]
        bad4 += [row[0] for row in B] != [F.pow(F.mul(neg, F.frobenius(a)), i) for i in range(p)]
        bad4 += _block_relation_violations(B, a, g, F)
        bad5 += sum(B[p - 1][j - 1] != last_row_formula(j, a, g, F) for j in range(1, p + 1))
        bad5 += sum(B[i - 1][p - 1] != last_column_formula(i, a, g, F) for i in range(1, p + 1))
    return [
        _result("block-entry-formula", ctx.scope, len(ctx.lines), bad4),
        _result("block-last-row-column", ctx.scope, len(ctx.lines), bad5, "last column sign (-1)^(i-1)"),
    ]


def check_kronecker(ctx):
    F = ctx.field
    q = ctx.q
    bad = bad_rel = 0
    for line in ctx.lines:
        G = gamma_matrix(ctx.sums(line), q)
        blocks = [b_matrix(h, line.alpha, line.gamma, F) for h in range(1, F.l + 1)]
        bad += G != kronecker_chain(blocks, F)
        bad_rel += _block_relation_violations(G, line.alpha, line.gamma, F) > 0
    return [
        _result("block-2x2-relation", ctx.scope, len(ctx.lines), bad_rel),
        _result("kronecker-factorization", ctx.scope, len(ctx.lines), bad),
    ]


def check_digit_condition(ctx):
    F = ctx.field
    q = ctx.q
    ks = [k for k in range(q * q + 1) if digit_condition_k(k, F)]
    bad = 0
    for line in ctx.lines:
        bad += sum(ctx.deg_tk(line, k) >= q for k in ks)
    return _result("digit-condition-sound", ctx.scope, len(ks) * len(ctx.lines), bad, f"{len(ks)} qualifying k")


def check_sufficient_condition(ctx, verdicts):
    F = ctx.field
    q = ctx.q
    if verdicts is not None:
        suff = [v for v in verdicts if v.sufficient_good]
        bad = sum(not v.oracle_good for v in suff)
        return _result("sufficient-condition-sound", "exhaustive", len(suff), bad, f"{len(suff)} covered monomials")
    # sampled: every covered monomial against the sampled secant lines
    cover = [(a, b) for b in range(q * q) for a in range(q) if sufficient_condition(a, b, F)]
    sweep = LineSweep(F, table=ctx.table, lines=[L.key for L in ctx.lines])
    bad = sum(not sweep.check(a, b)[0] for a, b in cover)
    return _result("sufficient-condition-sound", ctx.scope, len(cover), bad, f"{len(cover)} covered monomials")


def check_low_degree_good(ctx, verdicts):
    if verdicts is None:
        return CheckResult("low-degree-good", ctx.scope, 0, 0, "skipped", "needs the full oracle sweep")
    q = ctx.q
    low = [v for v in verdicts if v.a + v.b <= q - 1]
    return _result("low-degree-good", "exhaustive", len(low), sum(not v.oracle_good for v in low))


def check_oracle_routes(ctx, verdicts):
    """Cached-table oracle against naive per-line reduction."""
    F = ctx.field
    q = ctx.q
    if verdicts is None:
        return CheckResult("oracle-routes-agree", ctx.scope, 0, 0, "skipped", "needs the full oracle sweep")
    if q <= 4:
        sample = verdicts
        scope = "exhaustive"
    else:
        pick = ctx.rng.choice(len(verdicts), size=min(24, len(verdicts)), replace=False)
        sample = [verdicts[i] for i in sorted(pick.tolist())]
        scope = f"sampled({len(sample)})"
    bad = 0
    for v in sample:
        good, witness = is_good_naive(v.a, v.b, F)
        bad += good != v.oracle_good or witness != v.witness
    return _result("oracle-routes-agree", scope, len(sample), bad)


def check_independence(ctx, curve):
    F = ctx.field
    q = ctx.q
    if q**3 > 1000:
        return CheckResult("monomial-independence", "exhaustive", 0, 0, "skipped", "q^3 x q^3 elimination too large")
    basis = [(a, b) for b in range(q * q) for a in range(q)]
    rk = rank(evaluation_matrix(curve, basis), F)
    return _result("monomial-independence", "exhaustive", 1, int(rk != q**3), f"rank {rk} of {q ** 3}")


def check_rate(ctx, curve):
    F = ctx.field
    q = ctx.q
    code = build_code(F, "lifted-oracle", curve=curve)
    bound = rate_bound(F.p)
    k1 = len(onepoint_basis(q, q * q - 1))
    bad = int(code.rate < bound) + int(code.k < k1)
    return _result("rate-bound", "exhaustive", 1, bad, f"k = {code.k}, rate {code.rate} >= {bound}")


ODD_ONLY = ("block-entry-formula", "block-last-row-column", "block-2x2-relation", "kronecker-factorization")


def verify_lemmas(field: GF, force: bool = False, seed: int = 0) -> list[CheckResult]:
    """Run every check for ``field``.

    In characteristic 2 the B-matrix lemmas, which are stated for odd
    primes, are reported as skipped; the p-generic checks still run.
    """
    ctx = _Context(field, force, seed)
    curve = HermitianCurve(field)
    odd = field.p != 2
    verdicts = good_monomials(field) if ctx.exhaustive else None
    out = [
        check_point_count(ctx),
        check_intersections(ctx),
        check_root_identities(ctx),
        check_locality(ctx, curve),
        check_independence(ctx, curve),
        check_degree_criterion(ctx),
        *check_power_sums(ctx),
    ]
    if odd:
        out += check_b_matrices(ctx)
        out += check_kronecker(ctx)
    else:
        out += [CheckResult(cid, ctx.scope, 0, 0, "skipped", "stated for odd p") for cid in ODD_ONLY]
    out += [
        check_digit_condition(ctx),
        check_sufficient_condition(ctx, verdicts),
        check_low_degree_good(ctx, verdicts),
        check_oracle_routes(ctx, verdicts),
    ]
    if ctx.exhaustive:
        out.append(check_rate(ctx, curve))
    else:
        out.append(CheckResult("rate-bound", ctx.scope, 0, 0, "skipped", "needs the full oracle sweep"))
    return out
