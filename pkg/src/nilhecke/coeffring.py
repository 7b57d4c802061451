"""Exact arithmetic in Z[tau_m], tau_m = 2cos(pi/m), and its fraction field.

Elements of a degree-one ring (m = 2, 3, the crystallographic case) are
plain ``int`` / ``Fraction`` values.  For higher degree they are
:class:`AlgebraicNumber` instances holding power-basis coordinates.
Both kinds mix freely under the usual Python operators.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from mpmath.ctx_iv import MPIntervalContext as IVContext

from .errors import NotDivisibleError, RingMismatchError

# -- univariate helpers; polynomials are coefficient lists, constant first

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
        _trim(a)
    return _trim(q), a


def _pgcd(a: list, b: list) -> list:
    a, b = [Fraction(x) for x in a], [Fraction(x) for x in b]
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return [x / a[-1] for x in a]


def _deriv(p: list) -> list:
    return _trim([i * p[i] for i in range(1, len(p))])


def _as_int_poly(p: list) -> tuple[int, ...]:
    assert all(Fraction(x).denominator == 1 for x in p), p
    return tuple(int(x) for x in p)


def chebyshev_2cos(k: int) -> list:
    """P_k with P_k(2cos t) = 2cos(kt), from P_k = x*P_{k-1} - P_{k-2}."""
    prev, cur = [2], [0, 1]
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, _psub(_pmul([0, 1], cur), prev)
    return cur


@lru_cache(maxsize=None)
def _minpoly(m: int) -> tuple[int, ...]:
    # roots of P_m + 2 are 2cos(j*pi/m) for odd j; the non-primitive ones
    # (gcd(j, m) = g > 1) belong to the minimal polynomial for m/g
    p = chebyshev_2cos(m)
    p = _psub(p, [-2])
    sqfree = _pdivmod(p, _pgcd(p, _deriv(p)))[0]
    for g in range(3, m + 1, 2):
        if m % g == 0:
            q, r = _pdivmod(sqfree, list(_minpoly(m // g)))
            assert not r
            sqfree = q
    return _as_int_poly(sqfree)


class NumberRing:
    """The ring Z[tau_m] with tau_m = 2cos(pi/m), in the power basis."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError(f"m must be >= 2, got {m}")
        self.m = m
        self.minimal_polynomial = _minpoly(m)
        self.degree = len(self.minimal_polynomial) - 1
        self.embedding_value = 2 * math.cos(math.pi / m)
        d = self.degree
        # coordinates of tau^k for k = d .. 2d-2
        red = {}
        top = [-c for c in self.minimal_polynomial[:d]]
        red[d] = tuple(top)
        for k in range(d + 1, 2 * d - 1):
            prev = red[k - 1]
            shifted = [0] + list(prev[:-1])
            carry = prev[-1]
            red[k] = tuple(shifted[i] + carry * top[i] for i in range(d))
        self._reduce = red

    def __eq__(self, other):
        return isinstance(other, NumberRing) and other.m == self.m

    def __hash__(self):
        return hash(("NumberRing", self.m))

    def __repr__(self):
        return f"NumberRing(m={self.m})"

    def __reduce__(self):
        return (number_ring, (self.m,))

    @property
    def is_integers(self) -> bool:
        return self.degree == 1

    def element(self, coords) -> "int | Fraction | AlgebraicNumber":
        coords = tuple(coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        if self.degree == 1:
            # tau is the rational root of x - c
            return _norm(coords[0])
        return AlgebraicNumber(self, coords)

    @property
    def gen(self):
        if self.degree == 1:
            return -self.minimal_polynomial[0]
        return AlgebraicNumber(self, (0, 1) + (0,) * (self.degree - 2))

    def coords_of(self, x) -> tuple:
        if isinstance(x, AlgebraicNumber):
            if x.ring != self:
                raise RingMismatchError(f"{x.ring!r} vs {self!r}")
            return x.coords
        return (_norm(x),) + (0,) * (self.degree - 1)

    def embed(self, x) -> float:
        return to_float(x)

    def to_json(self) -> dict:
        return {"minpoly": list(self.minimal_polynomial), "m": self.m}


@lru_cache(maxsize=None)
def number_ring(m: int) -> NumberRing:
    return NumberRing(m)


def minpoly_2cos(m: int) -> NumberRing:
    """Return the ring spec whose generator is 2cos(pi/m)."""
    return number_ring(m)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, bool):
        return int(x)
    return x


class AlgebraicNumber:
    """An element of Q(tau_m) in power-basis coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: NumberRing, coords):
        self.ring = ring
        self.coords = tuple(_norm(c) for c in coords)

    # -- coercion
    def _other(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (other,) + (0,) * (len(self.coords) - 1)
        return None

    def _make(self, coords):
        return AlgebraicNumber(self.ring, coords)

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(a + b for a, b in zip(self.coords, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(a - b for a, b in zip(self.coords, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(b - a for a, b in zip(self.coords, o))

    def __neg__(self):
        return self._make(-a for a in self.coords)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._make(a * other for a in self.coords)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(_mulcoords(self.ring, self.coords, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self._make(Fraction(a) / other for a in self.coords)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * self._make(o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self._make((1,) + (0,) * (len(self.coords) - 1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coords == tuple(o)

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"AlgebraicNumber(m={self.ring.m}, coords={list(self.coords)!r})"

    def __str__(self):
        return format_scalar(self)

    def __lt__(self, other):
        return sign_of(self - other) < 0

    def __gt__(self, other):
        return sign_of(self - other) > 0

    # -- ring-specific
    def multiplication_matrix(self) -> list[list]:
        """Matrix of x -> self*x in the power basis (column j = self*tau^j)."""
        d = len(self.coords)
        cols = []
        for j in range(d):
            basis = [0] * d
            basis[j] = 1
            cols.append(_mulcoords(self.ring, self.coords, basis))
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def inverse(self) -> "AlgebraicNumber":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        mat = self.multiplication_matrix()
        rhs = [1] + [0] * (len(self.coords) - 1)
        return self._make(_solve(mat, rhs))

    def norm(self) -> Fraction:
        return _det(self.multiplication_matrix())

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) for c in self.coords)

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "coords": [_json_rational(c) for c in self.coords]}


def _mulcoords(ring: NumberRing, a, b) -> list:
    d = ring.degree
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k]
        if c:
            for i, r in enumerate(ring._reduce[k]):
                prod[i] += c * r
    return prod[:d]


def _solve(mat, rhs) -> list:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(mat, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _det(mat) -> Fraction:
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _json_rational(c):
    c = _norm(c)
    return c if isinstance(c, int) else str(c)


# -- generic scalar helpers (int, Fraction and AlgebraicNumber alike)

def is_zero(x) -> bool:
    return not x


def qdiv(a, b):
    """Field division, exact; rationals stay rationals."""
    if isinstance(b, AlgebraicNumber) or isinstance(a, AlgebraicNumber):
        return a / b
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return _norm(Fraction(a) / b)


def normalize(x):
    """Canonical form: Fractions with denominator 1 become ints."""
    if isinstance(x, AlgebraicNumber):
        if not any(x.coords[1:]):
            return x.coords[0]
        return x
    return _norm(x)


def is_integral(q) -> tuple[bool, object]:
    """Return (True, witness) iff q lies in Z[tau]."""
    if isinstance(q, AlgebraicNumber):
        if q.is_integral():
            return True, q
        return False, None
    q = _norm(q)
    if isinstance(q, int):
        return True, q
    return False, None


def exact_divide(a, b):
    """Quotient a/b, which must lie in Z[tau]."""
    if not b:
        raise ZeroDivisionError("exact_divide by zero")
    q = qdiv(a, b)
    ok, w = is_integral(q)
    if not ok:
        coords = q.coords if isinstance(q, AlgebraicNumber) else (q,)
        raise NotDivisibleError(
            f"{format_scalar(a)} is not divisible by {format_scalar(b)}: "
            f"quotient coordinates {[str(c) for c in coords]}")
    return w


def ring_arithmetic(a, b, op: str):
    if op == "add":
        return normalize(a + b)
    if op == "sub":
        return normalize(a - b)
    if op == "mul":
        return normalize(a * b)
    raise ValueError(f"unknown op {op!r}")


def to_float(x) -> float:
    if isinstance(x, AlgebraicNumber):
        t = x.ring.embedding_value
        return float(sum(float(c) * t ** k for k, c in enumerate(x.coords)))
    return float(x)


def sign_of(x) -> int:
    """Sign under tau -> 2cos(pi/m): -1, 0 or 1."""
    if not isinstance(x, AlgebraicNumber):
        return (x > 0) - (x < 0)
    if not x:
        return 0
    # cheap floating estimate with a generous error bound
    t = x.ring.embedding_value
    approx = 0.0
    bound = 0.0
    for k, c in enumerate(x.coords):
        term = float(c) * t ** k
        approx += term
        bound += abs(term)
    if abs(approx) > bound * 1e-12 + 1e-300:
        return 1 if approx > 0 else -1
    return _sign_interval(x)


def _sign_interval(x: AlgebraicNumber) -> int:
    ctx = IVContext()
    prec = 64
    while True:
        ctx.prec = prec
        tau = 2 * ctx.cos(ctx.pi / x.ring.m)
        val = ctx.mpf(0)
        for k, c in enumerate(x.coords):
            c = Fraction(c)
            val += ctx.mpf(c.numerator) / c.denominator * tau ** k
        if val.a > 0:
            return 1
        if val.b < 0:
            return -1
        prec *= 2
        if prec > 1 << 16:
            raise ArithmeticError(f"could not resolve sign of {x!r}")


def sign_label(x) -> str:
    return {-1: "negative", 0: "zero", 1: "positive"}[sign_of(x)]


def format_scalar(x, name: str = "tau") -> str:
    """Human-readable scalar, e.g. ``tau^2 + 2*tau - 1``."""
    x = normalize(x)
    if not isinstance(x, AlgebraicNumber):
        return str(x)
    parts = []
    for k in range(len(x.coords) - 1, -1, -1):
        c = x.coords[k]
        if not c:
            continue
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def scalar_to_json(x):
    x = normalize(x)
    if isinstance(x, AlgebraicNumber):
        return x.to_json()
    return _json_rational(x)


def is_unit_scalar(x) -> bool:
    return normalize(x) == 1


__all__ = [
    "AlgebraicNumber", "NumberRing", "number_ring", "minpoly_2cos", "chebyshev_2cos",
    "qdiv", "normalize", "is_integral", "exact_divide", "ring_arithmetic",
    "sign_of", "sign_label", "to_float", "format_scalar", "scalar_to_json",
    "is_zero",
]
