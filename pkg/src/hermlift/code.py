"""Evaluation codes on the Hermitian curve: the lifted code spanned by good
monomials and the one-point baseline, with rank, rate and distance tools.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .curve import HermitianCurve
from .gf import GF
from .liftcrit import good_monomials, rate_bound

__all__ = [
    "CodeError",
    "RankDeficient",
    "LengthMismatch",
    "TooLargeToEnumerate",
    "KINDS",
    "HermitianCode",
    "onepoint_basis",
    "onepoint_dimension",
    "lifted_basis",
    "evaluation_matrix",
    "rank",
    "build_code",
    "encode",
    "random_message",
    "rate_report",
    "hamming_distance",
    "min_distance_bruteforce",
]

KINDS = ("lifted-oracle", "lifted-sufficient", "onepoint")
ENUMERATION_LIMIT = 10**8


class CodeError(ValueError):
    pass


class RankDeficient(CodeError):
    pass


class LengthMismatch(CodeError):
    pass


class TooLargeToEnumerate(CodeError):
    pass


def onepoint_basis(q: int, r: int) -> list[tuple[int, int]]:
    """Exponents (a, b) of x^a y^b with b < q and a q + b (q + 1) <= r, in (b, a) order."""
    out = []
    for b in range(q):
        rest = r - b * (q + 1)
        if rest < 0:
            continue
        out.extend((a, b) for a in range(rest // q + 1))
    return sorted(out, key=lambda ab: (ab[1], ab[0]))


def onepoint_dimension(q: int, r: int) -> int:
    """r + 1 - q(q-1)/2, valid for q^2 - q - 2 < r < q^3."""
    if not q * q - q - 2 < r < q**3:
        raise CodeError(f"dimension formula needs {q * q - q - 2} < r < {q**3}")
    return r + 1 - q * (q - 1) // 2


def lifted_basis(field: GF, method: str = "oracle", strict: bool = False) -> list[tuple[int, int]]:
    verdicts = good_monomials(field, strict=strict)
    if method == "oracle":
        return [(v.a, v.b) for v in verdicts if v.oracle_good]
    if method == "sufficient":
        return [(v.a, v.b) for v in verdicts if v.sufficient_good]
    raise CodeError(f"unknown lifted method {method!r}")


def evaluation_matrix(curve: HermitianCurve, basis) -> np.ndarray:
    """Row m, column i holds x_i^a y_i^b for the m-th basis monomial."""
    F = curve.field
    G = np.empty((len(basis), len(curve)), dtype=np.int64)
    for m, (a, b) in enumerate(basis):
        G[m] = F.vmul(F.vpow(curve.xs, a), F.vpow(curve.ys, b))
    return G


def rank(matrix, field: GF) -> int:
    """Rank over ``field`` by Gaussian elimination.

    The pivot is the first nonzero entry of the leftmost column not yet
    eliminated, so the reduction is deterministic.
    """
    F = field
    M = np.array(matrix, dtype=np.int64, copy=True)
    if M.size == 0:
        return 0
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = F.vmul(M[r], F.inv(int(M[r, c])))
        below = M[r + 1 :, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = r + 1 + hit
            factors = M[idx, c]
            M[idx] = F.vsub(M[idx], F.vmul(factors[:, None], M[r][None, :]))
        r += 1
    return r


@dataclass
class HermitianCode:
    field: GF
    curve: HermitianCurve
    kind: str
    basis: list
    matrix: np.ndarray
    r: int | None = None
    rank: int = 0
    checks: dict = dc_field(default_factory=dict)

    @property
    def n(self):
        return self.matrix.shape[1]

    @property
    def k(self):
        return len(self.basis)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)


def build_code(field: GF, kind: str, r: int | None = None, curve: HermitianCurve | None = None) -> HermitianCode:
    """Build the generator matrix for ``kind`` in canonical point order.

    ``kind`` is one of ``lifted-oracle``, ``lifted-sufficient`` or
    ``onepoint`` (which needs the degree bound ``r``).  Raises
    :class:`RankDeficient` if the rows turn out dependent.
    """
    F = field
    q = F.q
    if kind not in KINDS:
        raise CodeError(f"unknown code kind {kind!r}; expected one of {KINDS}")
    curve = curve or HermitianCurve(F)
    checks = {}
    if kind == "onepoint":
        if r is None:
            raise CodeError("the one-point code needs a degree bound r")
        basis = onepoint_basis(q, r)
        if q * q - q - 2 < r < q**3:
            checks["dimension_formula"] = len(basis) == onepoint_dimension(q, r)
    else:
        basis = lifted_basis(F, kind.split("-", 1)[1])
        checks["basis_in_range"] = all(0 <= a < q and 0 <= b < q * q for a, b in basis)
    G = evaluation_matrix(curve, basis)
    rk = rank(G, F)
    checks["full_rank"] = rk == len(basis)
    if rk != len(basis):
        raise RankDeficient(f"{kind}: rank {rk} < {len(basis)} rows")
    return HermitianCode(F, curve, kind, basis, G, r, rk, checks)


def encode(code: HermitianCode, message) -> np.ndarray:
    """Codeword sum_m message[m] * row_m."""
    F = code.field
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (code.k,):
        raise LengthMismatch(f"message length {msg.shape} != k = {code.k}")
    out = np.zeros(code.n, dtype=np.int64)
    for m in np.flatnonzero(msg):
        out = F.vadd(out, F.vmul(msg[m], code.matrix[m]))
    return out


def random_message(code: HermitianCode, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, code.field.order, size=code.k, dtype=np.int64)


def rate_report(code: HermitianCode, onepoint_k: int | None = None) -> dict:
    """Length, dimension and rate next to the one-point rate and the rate lower bound.

    Rates are exact fractions rendered as ``"num/den"`` strings.
    """
    F = code.field
    q = F.q
    n = code.n
    if onepoint_k is None:
        onepoint_k = len(onepoint_basis(q, q * q - 1))
    bound = rate_bound(F.p)
    onepoint_rate = Fraction(onepoint_k, n)
    return {
        "kind": code.kind,
        "n": n,
        "k": code.k,
        "rate": str(code.rate),
        "rate_float": float(code.rate),
        "onepoint_rate": str(onepoint_rate),
        "rate_bound": str(bound),
        "rate_bound_float": float(bound),
        "rate_ge_bound": code.rate >= bound,
        "rate_ge_onepoint_rate": code.rate >= onepoint_rate,
    }


def hamming_distance(u, v) -> int:
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise LengthMismatch(f"lengths {u.shape} and {v.shape} differ")
    return int(np.count_nonzero(u != v))


def min_distance_bruteforce(matrix, field: GF, chunk: int = 1 << 16) -> int:
    """Minimum weight over all nonzero messages (= minimum distance).

    Enumerates ``field.order ** k`` messages in chunks; refuses beyond 10^8.
    """
    F = field
    G = np.asarray(matrix, dtype=np.int64)
    if G.ndim != 2 or G.shape[0] == 0:
        raise CodeError("generator matrix has no rows")
    k, n = G.shape
    total = F.order**k
    if total > ENUMERATION_LIMIT:
        raise TooLargeToEnumerate(f"{F.order}^{k} messages exceed {ENUMERATION_LIMIT}")
    best = n + 1
    weights = np.array([F.order**i for i in range(k)], dtype=np.int64)
    for start in range(1, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (ids[:, None] // weights[None, :]) % F.order
        words = np.zeros((ids.size, n), dtype=np.int64)
        for m in range(k):
            words = F.vadd(words, F.vmul(digits[:, m : m + 1], G[m][None, :]))
        w = np.count_nonzero(words, axis=1)
        best = min(best, int(w.min()))
    return best
