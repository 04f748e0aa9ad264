"""Univariate polynomials over a finite field.

Polynomials are immutable and carry the field they live over.  The zero
polynomial has degree ``NEG_INF``, which compares below every integer, so
``poly.degree < q`` is true for a zero remainder.
"""

from __future__ import annotations

import math
from itertools import zip_longest

from .gf import GF

__all__ = [
    "NEG_INF",
    "PolyError",
    "DivisionByZeroPoly",
    "DuplicateNode",
    "UniPoly",
    "poly_mod",
    "lagrange_interpolate",
    "binomial_mod",
    "restrict_monomial",
]

NEG_INF = float("-inf")


class PolyError(ValueError):
    pass


class DivisionByZeroPoly(PolyError, ZeroDivisionError):
    pass


class DuplicateNode(PolyError):
    def __init__(self, node):
        super().__init__(f"interpolation node {node} appears more than once")
        self.node = node


class UniPoly:
    """Polynomial with coefficients in ``field``, constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, [0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        F = self.field
        return UniPoly(F, [F.add(a, b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    def __neg__(self):
        return UniPoly(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, int):
            return UniPoly(F, [F.mul(a, other) for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UniPoly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, m):
        if m.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        dm = len(m.coeffs) - 1
        lead_inv = F.inv(m.coeffs[-1])
        quot = [0] * max(len(rem) - dm, 0)
        for i in range(len(rem) - 1, dm - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = F.mul(c, lead_inv)
            shift = i - dm
            quot[shift] = c
            for j, b in enumerate(m.coeffs):
                if b:
                    rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b))
        return UniPoly(F, quot), UniPoly(F, rem[:dm])

    def __mod__(self, m):
        return divmod(self, m)[1]

    def __call__(self, t):
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, t), c)
        return acc


def poly_mod(g: UniPoly, m: UniPoly) -> UniPoly:
    """Remainder of ``g`` on division by ``m``; deg(result) < deg(m)."""
    return g % m


def lagrange_interpolate(field: GF, samples) -> UniPoly:
    """The unique polynomial of degree < len(samples) through ``samples``.

    ``samples`` is a sequence of ``(t, value)`` pairs with distinct ``t``.
    Builds the node polynomial once and divides out one linear factor per
    sample, so the cost is quadratic in the number of samples.
    """
    F = field
    samples = list(samples)
    if not samples:
        raise PolyError("interpolation needs at least one sample")
    seen = set()
    for t, _ in samples:
        if t in seen:
            raise DuplicateNode(t)
        seen.add(t)
    n = len(samples)
    # node(t) = prod (t - t_i), coefficients constant first
    node = [1]
    for t, _ in samples:
        nt = F.neg(t)
        nxt = [0] * (len(node) + 1)
        for k, c in enumerate(node):
            nxt[k + 1] = F.add(nxt[k + 1], c)
            nxt[k] = F.add(nxt[k], F.mul(c, nt))
        node = nxt
    out = [0] * n
    for t_i, v in samples:
        # synthetic division: node / (t - t_i), top coefficient down
        quot = [0] * n
        carry = 0
        for k in range(n, 0, -1):
            carry = F.add(node[k], F.mul(carry, t_i))
            quot[k - 1] = carry
        denom = UniPoly(F, quot)(t_i)
        scale = F.div(v, denom)
        if scale:
            for k in range(n):
                out[k] = F.add(out[k], F.mul(scale, quot[k]))
    return UniPoly(F, out)


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem, digit by digit."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
    return out


def restrict_monomial(a: int, b: int, line) -> UniPoly:
    """Expand x^a y^b along ``line``: (alpha t + beta)^a t^b.

    ``line`` needs ``field``, ``alpha`` and ``beta`` attributes.  Terms whose
    binomial coefficient vanishes mod p are dropped.
    """
    F = line.field
    p = F.p
    coeffs = [0] * (a + b + 1)
    for j in range(a + 1):
        c = binomial_mod(a, j, p)
        if c:
            term = F.mul(F.from_int(c), F.mul(F.pow(line.alpha, j), F.pow(line.beta, a - j)))
            coeffs[b + j] = term
    return UniPoly(F, coeffs)
