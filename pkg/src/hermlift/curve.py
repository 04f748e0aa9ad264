"""Affine points of the Hermitian curve x^q + x + y^(q+1) = 0 over F_{q^2}
and the lines t -> (alpha t + beta, t) that cut it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import GF
from .polyring import UniPoly

__all__ = [
    "CurvePoint",
    "LineParam",
    "HermitianCurve",
    "make_line",
    "is_on_curve",
    "enumerate_points",
    "line_poly",
    "line_roots",
    "intersection_count",
    "lines_through",
    "all_lines",
    "line_pairs",
]


@dataclass(frozen=True)
class CurvePoint:
    x: int
    y: int
    index: int


@dataclass(frozen=True)
class LineParam:
    """The line L(t) = (alpha t + beta, t) over ``field``.

    ``gamma = beta + beta^q`` lies in F_q; the line is tangent to the curve
    exactly when ``gamma == alpha^(q+1)``.
    """

    field: GF
    alpha: int
    beta: int
    gamma: int
    tangent: bool

    def __call__(self, t):
        F = self.field
        return F.add(F.mul(self.alpha, t), self.beta), t

    @property
    def key(self):
        return self.alpha, self.beta


def make_line(field: GF, alpha: int, beta: int, check: bool = False) -> LineParam:
    """Build a :class:`LineParam`; ``check`` cross-validates tangency by root counting."""
    F = field
    gamma = F.trace(beta)
    tangent = gamma == F.pow(alpha, F.q + 1)
    line = LineParam(F, alpha, beta, gamma, tangent)
    if check:
        n = len(line_roots(line))
        expected = 1 if tangent else F.q + 1
        if n != expected:
            raise AssertionError(f"line {line.key}: {n} roots, tangent flag says {expected}")
    return line


def is_on_curve(field: GF, x: int, y: int) -> bool:
    F = field
    return F.add(F.trace(x), F.pow(y, F.q + 1)) == 0


def enumerate_points(field: GF) -> list[CurvePoint]:
    """All q^3 affine points, sorted by (y, x) in field order."""
    F = field
    elems = np.arange(F.order, dtype=np.int64)
    tr = F.vadd(elems, F.vpow(elems, F.q))
    rhs = F.vneg(F.vpow(elems, F.q + 1))  # x^q + x must equal -y^(q+1)
    by_trace = {}
    for x, t in enumerate(tr.tolist()):
        by_trace.setdefault(t, []).append(x)
    pts = []
    for y, need in enumerate(rhs.tolist()):
        for x in by_trace.get(need, ()):
            pts.append(CurvePoint(x, y, len(pts)))
    return pts


def line_poly(line: LineParam) -> UniPoly:
    """p(t) = t^(q+1) + alpha^q t^q + alpha t + gamma, monic of degree q+1."""
    F = line.field
    q = F.q
    c = [0] * (q + 2)
    c[q + 1] = 1
    c[q] = F.frobenius(line.alpha)
    c[1] = F.add(c[1], line.alpha)
    c[0] = F.add(c[0], line.gamma)
    return UniPoly(F, c)


def _line_values(F, alpha, gamma):
    """p_{alpha,beta}(t) for every t in the field, as an array."""
    t = np.arange(F.order, dtype=np.int64)
    v = F.vpow(t, F.q + 1)
    v = F.vadd(v, F.vmul(F.frobenius(alpha), F.vpow(t, F.q)))
    v = F.vadd(v, F.vmul(alpha, t))
    return F.vadd(v, gamma)


def line_roots(line: LineParam) -> list[int]:
    """Roots of :func:`line_poly` by exhaustive evaluation, ascending."""
    vals = _line_values(line.field, line.alpha, line.gamma)
    return np.flatnonzero(vals == 0).tolist()


def intersection_count(line: LineParam) -> int:
    return len(line_roots(line))


def all_lines(field: GF) -> list[LineParam]:
    """Every line of the family in canonical (alpha, beta) order."""
    F = field
    return [make_line(F, a, b) for a in F.elements() for b in F.elements()]


def line_pairs(field: GF, include_tangent: bool = False) -> list[tuple[int, int]]:
    """Distinct (alpha, gamma) pairs, ordered by alpha then gamma.

    The intersection polynomial depends on a line only through these two
    values, so anything computed from it can be cached per pair.
    """
    F = field
    sub = F.subfield()
    out = []
    for a in F.elements():
        tan = F.pow(a, F.q + 1)
        for g in sub:
            if include_tangent or g != tan:
                out.append((a, g))
    return out


def lines_through(field: GF, point) -> list[LineParam]:
    """The q^2 lines of the family through ``point``, one per alpha."""
    F = field
    x, y = point.x, point.y
    return [make_line(F, a, F.sub(x, F.mul(a, y))) for a in F.elements()]


INCIDENCE_CACHE_MAX_Q = 16


class HermitianCurve:
    """Point set of the curve over ``field`` with index lookup and caches."""

    def __init__(self, field: GF):
        if field.q is None:
            raise ValueError("the Hermitian curve needs a quadratic extension F_(q^2)")
        self.field = field
        self.q = field.q
        self.points = enumerate_points(field)
        self.xs = np.array([P.x for P in self.points], dtype=np.int64)
        self.ys = np.array([P.y for P in self.points], dtype=np.int64)
        self._index = {(P.x, P.y): P.index for P in self.points}

    def __len__(self):
        return len(self.points)

    def index_of(self, x, y):
        return self._index[(x, y)]

    def contains(self, x, y):
        return (x, y) in self._index

    def line_points(self, line: LineParam) -> list[int]:
        """Indices of the curve points on ``line``, ordered by t."""
        return [self._index[line(t)] for t in line_roots(line)]

    @cached_property
    def lines(self):
        return all_lines(self.field)

    @cached_property
    def _incidence(self):
        # per alpha: beta -> indices of points with x = alpha*y + beta, ordered by y
        F = self.field
        out = []
        for a in F.elements():
            betas = F.vsub(self.xs, F.vmul(a, self.ys))
            groups = {}
            for idx, b in enumerate(betas.tolist()):
                groups.setdefault(b, []).append(idx)
            out.append(groups)
        return out

    def points_on(self, alpha, beta):
        """Indices of the curve points on L_(alpha, beta), ordered by t = y."""
        if self.q > INCIDENCE_CACHE_MAX_Q:
            F = self.field
            betas = F.vsub(self.xs, F.vmul(alpha, self.ys))
            return np.flatnonzero(betas == beta).tolist()
        return list(self._incidence[alpha].get(beta, ()))
