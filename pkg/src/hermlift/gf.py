"""Arithmetic in the prime-power field GF(p^n).

Elements are plain Python ints: the element with coefficient vector
``(c_0, ..., c_{n-1})`` over F_p is stored as ``sum(c_i * p**i)``.  That
integer is also the serialized form, and the natural order of the ints is
the canonical enumeration order of the field.

The Hermitian machinery works in F_{q^2} with q = p^l, built by
:func:`field_create`.  The subfield F_q is not modelled separately; it is
the fixed field of the Frobenius map x -> x^q.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "FieldError",
    "NonPrimeError",
    "TooLargeError",
    "GF",
    "field_create",
    "is_prime",
    "least_irreducible",
]

MAX_ORDER = 2**40
TABLE_LIMIT = 2**20


class FieldError(ValueError):
    pass


class NonPrimeError(FieldError):
    def __init__(self, p):
        super().__init__(f"characteristic {p} is not prime")
        self.p = p


class TooLargeError(FieldError):
    def __init__(self, p, n):
        super().__init__(f"GF({p}^{n}) exceeds the desk-scale limit of 2^40 elements")
        self.p = p
        self.n = n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, constant term first ----------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _digits(m, p, n):
    out = []
    for _ in range(n):
        m, d = divmod(m, p)
        out.append(d)
    return out


def _pmod(a, m, p):
    """Remainder of a modulo the monic polynomial m, coefficients in F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            shift = i - dm
            for j in range(dm + 1):
                a[shift + j] = (a[shift + j] - c * m[j]) % p
    return _trim([x % p for x in a[:dm]] if len(a) > dm else [x % p for x in a])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


def _divides(d, f, p):
    return not _pmod(f, d, p)


def least_irreducible(p: int, n: int) -> list[int]:
    """Least monic irreducible polynomial of degree ``n`` over F_p.

    Candidates are ordered by the tuple ``(c_{n-1}, ..., c_0)``, which is
    the numeric order of ``sum(c_i p^i)``, so the first survivor of trial
    division is the answer.  Irreducibility is checked against every monic
    polynomial of degree at most ``n // 2``.
    """
    for m in range(p**n):
        f = _digits(m, p, n) + [1]
        if n > 1 and f[0] == 0:
            continue  # divisible by t
        irreducible = True
        for d in range(1, n // 2 + 1):
            for g in range(p**d):
                if _divides(_digits(g, p, d) + [1], f, p):
                    irreducible = False
                    break
            if not irreducible:
                break
        if irreducible:
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class GF:
    """The finite field with ``p**degree`` elements.

    Multiplication uses discrete-log tables and addition uses Zech
    logarithms when the field has at most 2^20 elements; otherwise every
    operation falls back to schoolbook polynomial arithmetic modulo
    :attr:`modulus`.  The ``*_schoolbook`` methods are always available and
    give the reference results the table path is tested against.

    For even degree ``2l`` the attributes ``l``, ``q = p**l`` and ``q2``
    describe the quadratic extension F_{q^2} / F_q.
    """

    def __init__(self, p: int, degree: int, tables: bool | None = None):
        if not is_prime(p):
            raise NonPrimeError(p)
        if degree < 1:
            raise FieldError("extension degree must be >= 1")
        if p**degree > MAX_ORDER:
            raise TooLargeError(p, degree)
        self.p = p
        self.degree = degree
        self.order = p**degree
        self.modulus = least_irreducible(p, degree)
        if degree % 2 == 0:
            self.l = degree // 2
            self.q = p**self.l
            self.q2 = self.order
        else:
            self.l = self.q = self.q2 = None
        self._pows = [p**i for i in range(degree)]
        if tables is None:
            tables = self.order <= TABLE_LIMIT
        self.has_tables = False
        if tables:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.degree) == (other.p, other.degree)

    def __hash__(self):
        return hash((self.p, self.degree))

    # -- representation ------------------------------------------------------

    def coeffs(self, x: int) -> list[int]:
        return _digits(x, self.p, self.degree)

    def from_coeffs(self, c) -> int:
        return sum((int(v) % self.p) * w for v, w in zip(c, self._pows))

    def elements(self) -> range:
        """All field elements in canonical order; 0 first, then 1."""
        return range(self.order)

    def from_int(self, v: int) -> int:
        """Embed an integer through the prime subfield."""
        return v % self.p

    # -- schoolbook reference path -------------------------------------------

    def add_schoolbook(self, x, y):
        p = self.p
        return self.from_coeffs([(a + b) % p for a, b in zip(self.coeffs(x), self.coeffs(y))])

    def neg_schoolbook(self, x):
        return self.from_coeffs([-a for a in self.coeffs(x)])

    def mul_schoolbook(self, x, y):
        prod = _pmul(_trim(self.coeffs(x)), _trim(self.coeffs(y)), self.p)
        return self.from_coeffs(_pmod(prod, self.modulus, self.p))

    def inv_schoolbook(self, x):
        """Inverse by the extended Euclidean algorithm on coefficient lists."""
        if x == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        p = self.p
        r0, r1 = list(self.modulus), _trim(self.coeffs(x))
        s0, s1 = [], [1]
        while r1:
            # polynomial long division r0 = qt * r1 + rem
            rem = list(r0)
            qt = [0] * max(len(r0) - len(r1) + 1, 1)
            lead_inv = pow(r1[-1], p - 2, p)
            for i in range(len(rem) - len(r1), -1, -1):
                c = rem[i + len(r1) - 1] * lead_inv % p
                qt[i] = c
                if c:
                    for j, v in enumerate(r1):
                        rem[i + j] = (rem[i + j] - c * v) % p
            rem = _trim(rem)
            r0, r1 = r1, rem
            t = _pmul(_trim(qt), s1, p)
            n = max(len(s0), len(t))
            s0, s1 = s1, _trim([((s0[i] if i < len(s0) else 0) - (t[i] if i < len(t) else 0)) % p for i in range(n)])
        # r0 is a nonzero constant
        c = pow(r0[0], p - 2, p)
        return self.from_coeffs(_pmod([v * c for v in s0], self.modulus, p))

    # -- tables ----------------------------------------------------------------

    def _pow_schoolbook(self, x, e):
        r = 1
        while e:
            if e & 1:
                r = self.mul_schoolbook(r, x)
            x = self.mul_schoolbook(x, x)
            e >>= 1
        return r

    def _find_generator(self):
        n = self.order - 1
        if n == 1:
            return 1
        factors = _prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_schoolbook(g, n // r) != 1 for r in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _mul_matrix(self, c):
        """Matrix over F_p of the linear map x -> c*x on coefficient vectors."""
        cols = [self.coeffs(self.mul_schoolbook(c, self._pows[j])) for j in range(self.degree)]
        return np.array(cols, dtype=np.int64)  # row j = image of z^j

    def _build_tables(self):
        n = self.order - 1
        p = self.p
        g = self._find_generator()
        weights = np.array(self._pows, dtype=np.int64)
        # powers g^0 .. g^(n-1) as digit rows, doubled block by block
        block = np.zeros((1, self.degree), dtype=np.int64)
        block[0, 0] = 1
        step = g
        while block.shape[0] < n:
            block = np.vstack([block, (block @ self._mul_matrix(step)) % p])
            step = self.mul_schoolbook(step, step)
        exp_arr = block[:n] @ weights
        log_arr = np.zeros(self.order, dtype=np.int64)
        log_arr[exp_arr] = np.arange(n)
        digits = (np.arange(self.order)[:, None] // weights) % p
        neg_arr = ((-digits) % p) @ weights
        one_plus = digits.copy()
        one_plus[:, 0] = (one_plus[:, 0] + 1) % p
        one_plus = one_plus @ weights
        # zech[k] = log(1 + g^k), -1 when 1 + g^k == 0
        s = one_plus[exp_arr]
        zech_arr = np.where(s == 0, -1, log_arr[s])
        self.generator = g
        self._n = n
        self.exp_arr = np.concatenate([exp_arr, exp_arr])  # two periods: log sums need no reduction
        self.log_arr = log_arr
        self.zech_arr = zech_arr
        self.neg_arr = neg_arr
        self._exp = self.exp_arr.tolist()
        self._log = log_arr.tolist()
        self._zech = zech_arr.tolist()
        self._neg = neg_arr.tolist()
        self.has_tables = True

    # -- scalar arithmetic -------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if not self.has_tables:
            return self.add_schoolbook(x, y)
        if x == 0:
            return y
        if y == 0:
            return x
        lx = self._log[x]
        z = self._zech[(self._log[y] - lx) % self._n]
        if z < 0:
            return 0
        return self._exp[lx + z]

    def neg(self, x: int) -> int:
        return self._neg[x] if self.has_tables else self.neg_schoolbook(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if not self.has_tables:
            return self.mul_schoolbook(x, y)
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if not self.has_tables:
            return self.inv_schoolbook(x)
        return self._exp[(self._n - self._log[x]) % self._n]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        if e == 0:
            return 1
        if x == 0:
            return 0
        if not self.has_tables:
            return self._pow_schoolbook(x, e)
        return self._exp[(self._log[x] * e) % self._n]

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # -- quadratic-extension maps ------------------------------------------------

    def _require_quadratic(self):
        if self.q is None:
            raise FieldError(f"{self!r} is not a quadratic extension F_(q^2)")

    def frobenius(self, x: int) -> int:
        """x^q, the generator of Gal(F_{q^2} / F_q)."""
        self._require_quadratic()
        return self.pow(x, self.q)

    def trace(self, x: int) -> int:
        return self.add(x, self.frobenius(x))

    def norm(self, x: int) -> int:
        return self.mul(x, self.frobenius(x))

    def in_subfield(self, x: int) -> bool:
        return self.frobenius(x) == x

    def subfield(self) -> list[int]:
        """The q elements of F_q, in canonical order."""
        return [x for x in self.elements() if self.in_subfield(x)]

    # -- vectorized arithmetic on int64 arrays -----------------------------------

    def vadd(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if not self.has_tables:
            return np.vectorize(self.add, otypes=[np.int64])(x, y)
        lx = self.log_arr[x]
        z = self.zech_arr[(self.log_arr[y] - lx) % self._n]
        out = np.where(z < 0, 0, self.exp_arr[lx + np.maximum(z, 0)])
        out = np.where(x == 0, y, out)
        return np.where(y == 0, x, out)

    def vneg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if not self.has_tables:
            return np.vectorize(self.neg, otypes=[np.int64])(x)
        return self.neg_arr[x]

    def vsub(self, x, y):
        return self.vadd(x, self.vneg(y))

    def vmul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if not self.has_tables:
            return np.vectorize(self.mul, otypes=[np.int64])(x, y)
        out = self.exp_arr[self.log_arr[x] + self.log_arr[y]]
        return np.where((x == 0) | (y == 0), 0, out)

    def vpow(self, x, e):
        """Elementwise x**e; ``e`` may be a scalar or an array, 0**0 == 1."""
        x = np.asarray(x, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        if not self.has_tables:
            return np.vectorize(self.pow, otypes=[np.int64])(x, e)
        out = self.exp_arr[(self.log_arr[x] * e) % self._n]
        out = np.where(x == 0, 0, out)
        return np.where(e == 0, 1, out)

    def vinv(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if not self.has_tables:
            return np.vectorize(self.inv, otypes=[np.int64])(x)
        return self.exp_arr[(self._n - self.log_arr[x]) % self._n]


def field_create(p: int, l: int, tables: bool | None = None) -> GF:
    """Build F_{q^2} for q = p**l."""
    if not is_prime(p):
        raise NonPrimeError(p)
    if l < 1:
        raise FieldError("extension exponent l must be >= 1")
    if p ** (2 * l) > MAX_ORDER:
        raise TooLargeError(p, 2 * l)
    return GF(p, 2 * l, tables=tables)
