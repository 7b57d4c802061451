"""Polynomials in the simple-root variables, the W-action and divided differences.

Variable ``x_j`` stands for the simple root alpha_{j+1}.  Coefficients are
ints, Fractions or :class:`~nilhecke.coeffring.AlgebraicNumber`.
"""

from __future__ import annotations

from math import comb

from .coeffring import (AlgebraicNumber, format_scalar, is_integral, normalize, qdiv,
                        scalar_to_json, sign_of)
from .errors import InvariantViolation, NotDivisibleError

# Index printed for alpha_1. Base 0 names the simple roots a0, a1, ...
DEFAULT_VAR_BASE = 0


class Poly:
    """Sparse multivariate polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: dict | None = None, _clean: bool = False):
        self.n = n
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {e: normalize(c) for e, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # -- constructors
    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, {}, True)

    @classmethod
    def const(cls, n: int, c) -> "Poly":
        c = normalize(c)
        return cls(n, {(0,) * n: c} if c else {}, True)

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls.const(n, 1)

    @classmethod
    def var(cls, n: int, i: int) -> "Poly":
        """The simple root alpha_i (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1}, True)

    @classmethod
    def linear(cls, coords) -> "Poly":
        n = len(coords)
        terms = {}
        for j, c in enumerate(coords):
            c = normalize(c)
            if c:
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = c
        return cls(n, terms, True)

    # -- arithmetic
    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, AlgebraicNumber)) or hasattr(other, "denominator"):
            return Poly.const(self.n, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = normalize(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.n, out, True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()}, True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "Poly":
        c = normalize(c)
        if not c:
            return Poly.zero(self.n)
        if c == 1:
            return self
        return Poly(self.n, {e: normalize(v * c) for e, v in self.terms.items()}, False)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            return self.scale(other)
        if not self.terms or not other.terms:
            return Poly.zero(self.n)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        ring = _common_ring(a, b)
        if ring is not None:
            return Poly(self.n, _mul_algebraic(ring, a, b), False)
        out: dict = {}
        for e1, c1 in b.items():
            for e2, c2 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.n, out, False)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.to_str(base=1)!r})"

    def __str__(self):
        return self.to_str()

    # -- queries
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly(self.n, {e: c for e, c in self.terms.items() if sum(e) == d}, True)

    def constant_term(self):
        return self.terms.get((0,) * self.n, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_integral(self) -> bool:
        return all(is_integral(c)[0] for c in self.terms.values())

    def coefficients(self) -> list:
        return list(self.terms.values())

    # -- exact division
    def divide_var(self, i0: int) -> "Poly":
        """Quotient by x_{i0}; every term must contain that variable."""
        out = {}
        for e, c in self.terms.items():
            if e[i0] == 0:
                raise NotDivisibleError(f"{self} is not divisible by variable {i0 + 1}")
            f = list(e)
            f[i0] -= 1
            out[tuple(f)] = c
        return Poly(self.n, out, True)

    def try_divide_linear(self, coords) -> "Poly | None":
        """Exact quotient by the linear form sum coords[j] x_j, or None.

        Synthetic division along the least variable with a nonzero coefficient.
        """
        r = next(j for j, c in enumerate(coords) if c)
        b = normalize(coords[r])
        others = [(j, normalize(c)) for j, c in enumerate(coords) if j != r and c]
        if not others:
            out = {}
            for e, c in self.terms.items():
                if e[r] == 0:
                    return None
                f = list(e)
                f[r] -= 1
                out[tuple(f)] = c if b == 1 else normalize(qdiv(c, b))
            return Poly(self.n, out, True)
        # group by x_r power: slices[k] = {exponent with e_r dropped to 0: coeff}
        slices: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[r]
            f = e[:r] + (0,) + e[r + 1:]
            slices.setdefault(k, {})[f] = c
        if not slices:
            return Poly.zero(self.n)
        top = max(slices)
        quotient: dict[int, dict] = {}
        carry: dict = {}  # L * Q_k, the term subtracted from P_k
        for k in range(top, 0, -1):
            pk = dict(slices.get(k, {}))
            for f, c in carry.items():
                v = pk.get(f, 0) - c
                if v:
                    pk[f] = v
                else:
                    pk.pop(f, None)
            qk = {f: normalize(qdiv(c, b)) for f, c in pk.items() if c}
            quotient[k - 1] = qk
            carry = {}
            for f, c in qk.items():
                for j, a in others:
                    g = list(f)
                    g[j] += 1
                    g = tuple(g)
                    v = carry.get(g, 0) + a * c
                    carry[g] = v
            carry = {f: c for f, c in carry.items() if c}
        # remainder: P_0 - L*Q_0 must vanish
        p0 = dict(slices.get(0, {}))
        for f, c in carry.items():
            v = normalize(p0.get(f, 0) - c)
            if v:
                p0[f] = v
            else:
                p0.pop(f, None)
        if any(normalize(c) for c in p0.values()):
            return None
        out = {}
        for k, qk in quotient.items():
            for f, c in qk.items():
                if k:
                    g = list(f)
                    g[r] = k
                    f = tuple(g)
                out[f] = c
        return Poly(self.n, out, False)

    def divide_linear(self, coords) -> "Poly":
        q = self.try_divide_linear(coords)
        if q is None:
            raise NotDivisibleError(f"{self} is not divisible by linear form {tuple(coords)}")
        return q

    # -- substitution
    def substitute_linear(self, forms) -> "Poly":
        """Replace x_j by the linear form ``forms[j]`` (coordinate tuple)."""
        if not self.terms:
            return self
        n = self.n
        lin = [Poly.linear(f) for f in forms]
        cache: dict[tuple[int, int], Poly] = {}

        def power(j, k):
            key = (j, k)
            p = cache.get(key)
            if p is None:
                p = lin[j] if k == 1 else power(j, k - 1) * lin[j]
                cache[key] = p
            return p

        out: dict = {}
        for e, c in self.terms.items():
            acc = None
            for j in range(n):
                if e[j]:
                    p = power(j, e[j])
                    acc = p if acc is None else acc * p
            if acc is None:
                key = (0,) * n
                out[key] = out.get(key, 0) + c
                continue
            for f, v in acc.terms.items():
                out[f] = out.get(f, 0) + c * v
        return Poly(n, out, False)

    def map_coefficients(self, fn) -> "Poly":
        return Poly(self.n, {e: fn(c) for e, c in self.terms.items()}, False)

    # -- output
    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in degree-reverse-lexicographic order, largest first."""
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0]), tuple(-x for x in reversed(t[0]))),
                      reverse=True)

    def to_str(self, base: int | None = None, prefix: str = "a") -> str:
        if not self.terms:
            return "0"
        base = DEFAULT_VAR_BASE if base is None else base
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{prefix}{j + base}" if k == 1 else f"{prefix}{j + base}^{k}"
                for j, k in enumerate(e) if k)
            neg, body = _coeff_text(c, bool(mono))
            text = body if not mono else (mono if body == "" else f"{body}*{mono}")
            pieces.append((neg, text))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, text in pieces[1:]:
            out += (" - " if neg else " + ") + text
        return out

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": scalar_to_json(c)}
                for e, c in self.sorted_terms()]


def _common_ring(a: dict, b: dict):
    """The number ring when some coefficient is algebraic, else None."""
    for terms in (a, b):
        for c in terms.values():
            if isinstance(c, AlgebraicNumber):
                return c.ring
    return None


def _mul_algebraic(ring, a: dict, b: dict) -> dict:
    # convolve raw power-basis coordinates, reduce each monomial once at the end
    d = ring.degree
    width = 2 * d - 1

    def coords(c):
        if isinstance(c, AlgebraicNumber):
            return [(i, x) for i, x in enumerate(c.coords) if x]
        return [(0, c)]

    ca = [(e, coords(c)) for e, c in a.items()]
    cb = [(e, coords(c)) for e, c in b.items()]
    acc: dict = {}
    for e1, x1 in cb:
        for e2, x2 in ca:
            e = tuple(u + v for u, v in zip(e1, e2))
            buf = acc.get(e)
            if buf is None:
                buf = acc[e] = [0] * width
            for i, x in x1:
                for j, y in x2:
                    buf[i + j] += x * y
    out = {}
    red = ring._reduce
    for e, buf in acc.items():
        for k in range(width - 1, d - 1, -1):
            c = buf[k]
            if c:
                for i, r in enumerate(red[k]):
                    buf[i] += c * r
        if any(buf[:d]):
            out[e] = AlgebraicNumber(ring, buf[:d])
    return out


def _coeff_text(c, with_mono: bool) -> tuple[bool, str]:
    """(is_negative, magnitude text); empty text means a unit coefficient."""
    c = normalize(c)
    if isinstance(c, AlgebraicNumber):
        nz = [x for x in c.coords if x]
        if len(nz) == 1:
            neg = nz[0] < 0
            mag = format_scalar(-c if neg else c)
            if with_mono and mag == "1":
                return neg, ""
            return neg, mag
        txt = format_scalar(c)
        return False, f"({txt})" if with_mono else txt
    neg = c < 0
    mag = -c if neg else c
    if with_mono and mag == 1:
        return neg, ""
    return neg, str(mag)


# -- W-action and divided differences; group elements given as matrices

def act_matrix(matrix, p: Poly) -> Poly:
    """Substitute alpha_j by the column j of ``matrix``."""
    n = p.n
    forms = [tuple(matrix[r][j] for r in range(n)) for j in range(n)]
    return p.substitute_linear(forms)


def act(w, p: Poly) -> Poly:
    """w(p) for a WeylElement (or anything with ``.matrix``)."""
    return act_matrix(w.matrix, p)


def act_simple(datum, i: int, p: Poly) -> Poly:
    """s_i(p) for 1-based i."""
    if not p.terms:
        return p
    i0 = i - 1
    n = datum.n
    c = datum.cartan
    forms = []
    for j in range(n):
        col = [0] * n
        col[j] = 1
        col[i0] = normalize(col[i0] - c[j][i0])
        forms.append(tuple(col))
    return p.substitute_linear(forms)


def ddx(datum, i: int, p: Poly) -> Poly:
    """X_i o p = (p - s_i p) / alpha_i."""
    num = p - act_simple(datum, i, p)
    try:
        return num.divide_var(i - 1)
    except NotDivisibleError as exc:
        raise InvariantViolation(f"divided difference left a remainder: {exc}") from exc


def ddy(datum, i: int, p: Poly) -> Poly:
    """Y_i o p = (s_i p - p) / alpha_i; the Demazure operator of the reference code."""
    return -ddx(datum, i, p)


def augment(p: Poly):
    """Evaluation at 0."""
    return p.constant_term()


def circ_apply(z, p):
    """z o p for a twisted-group-algebra element z."""
    return z.circ(p)


def linear_form(datum, v) -> Poly:
    return Poly.linear(v)


def sign_of_coefficients(p: Poly) -> set[int]:
    return {sign_of(c) for c in p.terms.values()}


__all__ = [
    "Poly", "act", "act_matrix", "act_simple", "ddx", "ddy", "augment", "circ_apply",
    "linear_form", "DEFAULT_VAR_BASE", "comb",
]
