"""Good-monomial criteria for the Hermitian-lifted code.

A monomial x^a y^b is *good* when its restriction (alpha t + beta)^a t^b
reduces, modulo the intersection polynomial of every non-tangent line, to
degree at most q - 1.  This module holds the exact oracle for that
property (two routes: a naive per-line reduction and a cached table path),
the power-sum machinery behind the degree criterion, the B-matrix /
Kronecker factorization of the power-sum matrix, and the digit-level
sufficient conditions together with the resulting rate bound.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .curve import LineParam, line_pairs, line_poly, line_roots, make_line
from .gf import GF
from .polyring import NEG_INF, UniPoly, binomial_mod, restrict_monomial

__all__ = [
    "CriterionError",
    "ExponentOutOfRange",
    "TangentLine",
    "EvenPrime",
    "MonomialVerdict",
    "PowerSumTable",
    "ReductionTable",
    "LineSweep",
    "deg_alpha_beta",
    "is_good_naive",
    "is_good_oracle",
    "good_monomials",
    "power_sums_direct",
    "power_sums_recurrence",
    "degree_criterion_check",
    "b_matrix",
    "kronecker",
    "kronecker_chain",
    "gamma_matrix",
    "verify_gamma_factorization",
    "last_row_formula",
    "last_column_formula",
    "digit_condition_k",
    "lucas_nonzero",
    "sufficient_condition",
    "rate_lower_bound",
    "rate_bound",
]


class CriterionError(ValueError):
    pass


class ExponentOutOfRange(CriterionError):
    def __init__(self, a, b, q):
        super().__init__(f"monomial x^{a} y^{b} outside 0 <= a <= {q - 1}, 0 <= b <= {q * q - 1}")


class TangentLine(CriterionError):
    def __init__(self, line):
        super().__init__(f"line (alpha={line.alpha}, beta={line.beta}) is tangent to the curve")


class EvenPrime(CriterionError):
    pass


def _check_exponents(a, b, q):
    if not (0 <= a <= q - 1 and 0 <= b <= q * q - 1):
        raise ExponentOutOfRange(a, b, q)


def _require_secant(line):
    if line.tangent:
        raise TangentLine(line)


# -- degree after reduction ------------------------------------------------------

def deg_alpha_beta(g: UniPoly, line: LineParam):
    """Degree of ``g`` modulo the intersection polynomial of ``line``."""
    return (g % line_poly(line)).degree


@dataclass(frozen=True)
class MonomialVerdict:
    a: int
    b: int
    oracle_good: bool
    sufficient_good: bool
    witness: tuple[int, int] | None = None  # (alpha, beta) of the first failing line


def is_good_naive(a: int, b: int, field: GF, strict: bool = False):
    """Reference oracle: reduce the restriction along every line separately.

    Returns ``(good, witness)``.  Tangent lines are skipped unless ``strict``.
    """
    F = field
    q = F.q
    _check_exponents(a, b, q)
    for alpha in F.elements():
        for beta in F.elements():
            line = make_line(F, alpha, beta)
            if line.tangent and not strict:
                continue
            if deg_alpha_beta(restrict_monomial(a, b, line), line) > q - 1:
                return False, (alpha, beta)
    return True, None


class ReductionTable:
    """Remainders of t^k modulo p_(alpha, gamma)(t) for every (alpha, gamma).

    ``rem[r, k]`` holds the q + 1 coefficients of t^k mod p for the pair in
    row ``r`` of :attr:`pairs`; tangent pairs are included so the strict
    oracle can use the same table.
    """

    def __init__(self, field: GF, kmax: int | None = None, pairs=None):
        F = field
        q = F.q
        self.field = field
        self.kmax = q * q + q if kmax is None else kmax
        self.pairs = list(pairs) if pairs is not None else line_pairs(F, include_tangent=True)
        self.row = {pair: r for r, pair in enumerate(self.pairs)}
        alpha = np.array([a for a, _ in self.pairs], dtype=np.int64)
        gamma = np.array([g for _, g in self.pairs], dtype=np.int64)
        na_q = F.vneg(F.vpow(alpha, q))
        na = F.vneg(alpha)
        ng = F.vneg(gamma)
        P = len(self.pairs)
        rem = np.zeros((P, self.kmax + 1, q + 1), dtype=np.int64)
        cur = np.zeros((P, q + 1), dtype=np.int64)
        cur[:, 0] = 1
        for k in range(self.kmax + 1):
            rem[:, k] = cur
            lead = cur[:, q]
            nxt = np.zeros_like(cur)
            nxt[:, 1:] = cur[:, :q]
            # t^(q+1) = -alpha^q t^q - alpha t - gamma
            nxt[:, q] = F.vadd(nxt[:, q], F.vmul(na_q, lead))
            nxt[:, 1] = F.vadd(nxt[:, 1], F.vmul(na, lead))
            nxt[:, 0] = F.vadd(nxt[:, 0], F.vmul(ng, lead))
            cur = nxt
        self.rem = rem
        self.top = rem[:, :, q]  # coefficient of t^q
        self.tangent = np.array(
            [g == F.pow(a, q + 1) for a, g in self.pairs], dtype=bool
        )

    def remainder(self, alpha, gamma, k) -> UniPoly:
        return UniPoly(self.field, self.rem[self.row[(alpha, gamma)], k].tolist())

    def degree(self, alpha, gamma, k):
        return self.remainder(alpha, gamma, k).degree


class LineSweep:
    """A batch of lines, by default all q^4 in canonical (alpha, beta) order.

    Goodness of x^a y^b on a line is decided from the t^q coefficient

        sum_j C(a, j) alpha^j beta^(a-j) top[alpha, gamma][b + j],

    vectorized across lines.  ``lines`` may restrict the batch to given
    (alpha, beta) pairs; the reduction table then covers only their
    (alpha, gamma) classes.
    """

    def __init__(self, field: GF, table: ReductionTable | None = None, lines=None):
        F = field
        q = F.q
        self.field = field
        if lines is None:
            elems = np.arange(F.order, dtype=np.int64)
            self.alpha = np.repeat(elems, F.order)
            self.beta = np.tile(elems, F.order)
        else:
            ab = np.array(lines, dtype=np.int64).reshape(-1, 2)
            self.alpha, self.beta = ab[:, 0], ab[:, 1]
        self.gamma = F.vadd(self.beta, F.vpow(self.beta, q))
        self.tangent = self.gamma == F.vpow(self.alpha, q + 1)
        if table is None:
            pairs = None
            if lines is not None:
                pairs = sorted(set(zip(self.alpha.tolist(), self.gamma.tolist())))
            table = ReductionTable(F, pairs=pairs)
        self.table = table
        rows = [table.row[(a, g)] for a, g in zip(self.alpha.tolist(), self.gamma.tolist())] if lines is not None else None
        if rows is None:
            lookup = np.full((F.order, F.order), -1, dtype=np.int64)
            for (a, g), r in table.row.items():
                lookup[a, g] = r
            self.row = lookup[self.alpha, self.gamma]
        else:
            self.row = np.array(rows, dtype=np.int64)
        self.apow = np.stack([F.vpow(self.alpha, j) for j in range(q)])
        self.bpow = np.stack([F.vpow(self.beta, j) for j in range(q)])

    def top_coefficients(self, a, b):
        """t^q coefficient of the reduced restriction, one entry per line."""
        F = self.field
        p = F.p
        acc = np.zeros(self.alpha.shape, dtype=np.int64)
        for j in range(a + 1):
            c = binomial_mod(a, j, p)
            if not c:
                continue
            term = F.vmul(self.apow[j], self.bpow[a - j])
            if c != 1:
                term = F.vmul(term, F.from_int(c))
            term = F.vmul(term, self.table.top[self.row, b + j])
            acc = F.vadd(acc, term)
        return acc

    def check(self, a, b, strict=False):
        """``(good, witness)`` for x^a y^b over the non-tangent (or all) lines."""
        bad = self.top_coefficients(a, b) != 0
        if not strict:
            bad &= ~self.tangent
        hits = np.flatnonzero(bad)
        if hits.size == 0:
            return True, None
        i = int(hits[0])
        return False, (int(self.alpha[i]), int(self.beta[i]))


@lru_cache(maxsize=8)
def _sweep(field):
    return LineSweep(field)


def is_good_oracle(a: int, b: int, field: GF, strict: bool = False) -> MonomialVerdict:
    F = field
    _check_exponents(a, b, F.q)
    good, witness = _sweep(F).check(a, b, strict)
    return MonomialVerdict(a, b, good, sufficient_condition(a, b, F), witness)


def _workers(workers):
    if workers is not None:
        return max(1, int(workers))
    import os

    try:
        return max(1, int(os.environ.get("HERMLIFT_THREADS", "1")))
    except ValueError:
        return 1


def good_monomials(field: GF, strict: bool = False, workers: int | None = None) -> list[MonomialVerdict]:
    """Verdicts for every x^a y^b with a < q, b < q^2, in (b, a) order.

    Results are merged in input order, so they do not depend on the number
    of worker threads.
    """
    F = field
    q = F.q
    sweep = _sweep(F)
    grid = [(a, b) for b in range(q * q) for a in range(q)]

    def one(ab):
        a, b = ab
        good, witness = sweep.check(a, b, strict)
        return MonomialVerdict(a, b, good, sufficient_condition(a, b, F), witness)

    n = _workers(workers)
    if n == 1:
        return [one(ab) for ab in grid]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(one, grid))


# -- power sums ------------------------------------------------------------------

@dataclass(frozen=True)
class PowerSumTable:
    alpha: int
    gamma: int
    values: tuple

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def power_sums_direct(line: LineParam, kmax: int) -> PowerSumTable:
    """P_k = sum of sigma^k over the q + 1 roots sigma, for k = 0..kmax."""
    _require_secant(line)
    F = line.field
    roots = np.array(line_roots(line), dtype=np.int64)
    if len(roots) != F.q + 1:
        raise AssertionError(f"secant line with {len(roots)} roots")
    powers = F.vpow(roots[:, None], np.arange(kmax + 1)[None, :])
    acc = powers[0]
    for row in powers[1:]:
        acc = F.vadd(acc, row)
    return PowerSumTable(line.alpha, line.gamma, tuple(acc.tolist()))


def power_sums_recurrence(line: LineParam, kmax: int) -> PowerSumTable:
    """Power sums from the coefficients alone.

    Newton's identities give P_1..P_q; from k = q + 1 on the sums follow
    P_k = -alpha^q P_(k-1) - alpha P_(k-q) - gamma P_(k-q-1).
    """
    _require_secant(line)
    F = line.field
    q = F.q
    a, g = line.alpha, line.gamma
    aq = F.frobenius(a)
    # monic t^(q+1) + e_1 t^q + ... + e_(q+1): e_1 = alpha^q, e_q = alpha, e_(q+1) = gamma
    e = [0] * (q + 2)
    e[1] = F.add(e[1], aq)
    e[q] = F.add(e[q], a)
    e[q + 1] = F.add(e[q + 1], g)
    P = [F.from_int(q + 1)]
    for k in range(1, min(kmax, q) + 1):
        s = F.mul(F.from_int(k), e[k])
        for i in range(1, k):
            s = F.add(s, F.mul(e[i], P[k - i]))
        P.append(F.neg(s))
    for k in range(q + 1, kmax + 1):
        s = F.add(F.mul(aq, P[k - 1]), F.mul(a, P[k - q]))
        s = F.add(s, F.mul(g, P[k - q - 1]))
        P.append(F.neg(s))
    return PowerSumTable(a, g, tuple(P))


def degree_criterion_check(line: LineParam, k: int, sums: PowerSumTable | None = None):
    """Both sides of: deg(t^k mod p) < q  <=>  P_(k+1) = -alpha^q P_k.

    Returns ``(deg_lt_q, recurrence_holds)``.
    """
    _require_secant(line)
    F = line.field
    q = F.q
    deg = deg_alpha_beta(UniPoly.monomial(F, k), line)
    if sums is None or len(sums) < k + 2:
        sums = power_sums_direct(line, k + 1)
    rhs = F.neg(F.mul(F.frobenius(line.alpha), sums[k]))
    return deg < q, sums[k + 1] == rhs


# -- the B matrices and the Kronecker factorization --------------------------------

def _sign(e, p):
    return 1 if e % 2 == 0 else p - 1


def _b_entry(i, j, alpha, gamma, F):
    """Unpowered entry (i, j), 1-indexed, of the p x p block."""
    p, q = F.p, F.q
    acc = 0
    for n in range(min(i, j)):
        c = binomial_mod(i - 1, n, p) * binomial_mod(i + j - n - 2, i - 1, p) * _sign(i + j - n, p) % p
        if c:
            term = F.mul(F.pow(alpha, (i - 1 - n) * q + j - 1 - n), F.pow(gamma, n))
            acc = F.add(acc, F.mul(F.from_int(c), term))
    return acc


def b_matrix(h: int, alpha: int, gamma: int, field: GF) -> list[list[int]]:
    """The p x p block B_h: the closed-form entry raised to p^(l - h)."""
    F = field
    if not 1 <= h <= F.l:
        raise CriterionError(f"block index h={h} outside 1..{F.l}")
    e = F.p ** (F.l - h)
    p = F.p
    return [[F.pow(_b_entry(i, j, alpha, gamma, F), e) for j in range(1, p + 1)] for i in range(1, p + 1)]


def kronecker(A, B, field: GF):
    """Block matrix [a_ij * B] over ``field``."""
    F = field
    out = []
    for arow in A:
        for brow in B:
            out.append([F.mul(a, b) for a in arow for b in brow])
    return out


def kronecker_chain(blocks, field: GF):
    out = blocks[0]
    for B in blocks[1:]:
        out = kronecker(out, B, field)
    return out


def gamma_matrix(sums: PowerSumTable, q: int):
    """q x q matrix with entry (r, c) = P_(c q + r), 0-indexed."""
    return [[sums[c * q + r] for c in range(q)] for r in range(q)]


def verify_gamma_factorization(line: LineParam, field: GF | None = None, sums: PowerSumTable | None = None) -> bool:
    """Whether the power-sum matrix of ``line`` equals B_1 x B_2 x ... x B_l."""
    _require_secant(line)
    F = field or line.field
    q = F.q
    if sums is None:
        sums = power_sums_direct(line, q * q - 1)
    blocks = [b_matrix(h, line.alpha, line.gamma, F) for h in range(1, F.l + 1)]
    return gamma_matrix(sums, q) == kronecker_chain(blocks, F)


def last_row_formula(j: int, alpha: int, gamma: int, field: GF) -> int:
    """Closed form of entry (p, j) of the unpowered block."""
    F = field
    p, q = F.p, F.q
    v = F.mul(F.pow(alpha, (p - j) * q), F.pow(gamma, j - 1))
    return v if (j - 1) % 2 == 0 else F.neg(v)


def last_column_formula(i: int, alpha: int, gamma: int, field: GF, constant_sign: bool = False) -> int:
    """Closed form of entry (i, p) of the unpowered block.

    The sign is (-1)^(i-1), which is what the entry formula produces since
    C(p-1, i-1) = (-1)^(i-1) mod p.  ``constant_sign=True`` gives the variant
    with a constant sign (-1)^(p-1), kept for comparison; it disagrees on
    every even row whenever the entry is nonzero.
    """
    F = field
    p = F.p
    v = F.mul(F.pow(alpha, p - i), F.pow(gamma, i - 1))
    e = (p - 1) if constant_sign else (i - 1)
    return v if e % 2 == 0 else F.neg(v)


# -- digit conditions --------------------------------------------------------------

def digit_condition_k(k: int, field: GF) -> bool:
    """k = wq + z qualifies if w = 0, or some p^i (1 <= i <= l) divides w
    while z is not -1 mod p^i."""
    F = field
    p, q, l = F.p, F.q, F.l
    w, z = divmod(k, q)
    if w == 0:
        return True
    for i in range(1, l + 1):
        m = p**i
        if w % m == 0 and z % m != m - 1:
            return True
    return False


def lucas_nonzero(c: int, d: int, p: int) -> bool:
    """True when c lies in the p-shadow of d, i.e. C(d, c) != 0 mod p."""
    while c or d:
        if c % p > d % p:
            return False
        c //= p
        d //= p
    return True


def _digit(x, s, p):
    return (x // p**s) % p


def sufficient_condition(a: int, b: int, field: GF) -> bool:
    """Digit-level sufficient condition for x^a y^b to be good.

    Writes b = wq + b' with b' < q and looks for 1 <= i <= l with
    p^i | w, b' < p^(l-1), a < p^(l-1) and a position s < i where the
    p-ary digits of a and b' are both zero.  Every (i, s) is tried.
    """
    F = field
    p, q, l = F.p, F.q, F.l
    _check_exponents(a, b, q)
    w, b1 = divmod(b, q)
    bound = p ** (l - 1)
    if b1 >= bound or a >= bound:
        return False
    for i in range(1, l + 1):
        if w % p**i:
            continue
        for s in range(i):
            if _digit(a, s, p) == 0 and _digit(b1, s, p) == 0:
                return True
    return False


def rate_lower_bound(p: int) -> Fraction:
    """0.469 / (p^4 (p-1) (p^3 - p^2 + 1)) for an odd prime p."""
    if p == 2:
        raise EvenPrime("the odd-characteristic bound does not apply to p = 2")
    return Fraction(469, 1000) / (p**4 * (p - 1) * (p**3 - p**2 + 1))


def rate_bound(p: int) -> Fraction:
    """Rate lower bound for the lifted code; 0.007 in characteristic 2."""
    return Fraction(7, 1000) if p == 2 else rate_lower_bound(p)
