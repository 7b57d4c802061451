"""The twisted group algebra Q_W, nil-Hecke elements, dual bases and transition matrices.

Group elements are indices into a :class:`~nilhecke.weyl.GroupTable`.
Scalars of Q are :class:`RootFraction` values: a polynomial numerator over
a multiset of positive roots.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .coeffring import normalize
from .errors import InvariantViolation, NotDivisibleError
from .polyops import Poly
from .weyl import GroupTable


@lru_cache(maxsize=None)
def _root_poly(datum, k: int) -> Poly:
    return Poly.linear(datum.positive_roots[k])


def root_poly(datum, k: int) -> Poly:
    return _root_poly(datum, k)


def _prod_roots(datum, roots) -> Poly:
    out = Poly.one(datum.n)
    for k in roots:
        out = out * _root_poly(datum, k)
    return out


class RootFraction:
    """num / prod(beta for beta in den); den is a sorted tuple of positive-root indices."""

    __slots__ = ("datum", "num", "den")

    def __init__(self, datum, num: Poly, den: tuple = (), reduce: bool = True):
        self.datum = datum
        if not num.terms:
            den = ()
        elif den and reduce:
            num, den = _cancel(datum, num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, datum, p) -> "RootFraction":
        if not isinstance(p, Poly):
            p = Poly.const(datum.n, p)
        return cls(datum, p, (), False)

    @classmethod
    def inverse_root(cls, datum, k: int, sign: int = 1) -> "RootFraction":
        return cls(datum, Poly.const(datum.n, sign), (k,), False)

    @classmethod
    def zero(cls, datum) -> "RootFraction":
        return cls(datum, Poly.zero(datum.n), (), False)

    @classmethod
    def one(cls, datum) -> "RootFraction":
        return cls(datum, Poly.one(datum.n), (), False)

    def __bool__(self):
        return bool(self.num.terms)

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_polynomial(self) -> bool:
        return not self.den

    def to_poly(self) -> Poly:
        if self.den:
            raise InvariantViolation(f"expected a polynomial, got {self}")
        return self.num

    def __neg__(self):
        return RootFraction(self.datum, -self.num, self.den, False)

    def __add__(self, other):
        other = _as_fraction(self.datum, other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return RootFraction(self.datum, self.num + other.num, self.den)
        ca, cb = Counter(self.den), Counter(other.den)
        common = ca | cb
        na = self.num * _prod_roots(self.datum, (common - ca).elements())
        nb = other.num * _prod_roots(self.datum, (common - cb).elements())
        return RootFraction(self.datum, na + nb, tuple(sorted(common.elements())))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_fraction(self.datum, other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_fraction(self.datum, other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_fraction(self.datum, other)
        if other is None:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return RootFraction.zero(self.datum)
        num = self.num * other.num
        den = tuple(sorted(self.den + other.den))
        return RootFraction(self.datum, num, den)

    __rmul__ = __mul__

    def divide_by_root(self, k: int, sign: int = 1) -> "RootFraction":
        return self * RootFraction.inverse_root(self.datum, k, sign)

    def __eq__(self, other):
        other = _as_fraction(self.datum, other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        ca, cb = Counter(self.den), Counter(other.den)
        common = ca & cb
        lhs = self.num * _prod_roots(self.datum, (cb - common).elements())
        rhs = other.num * _prod_roots(self.datum, (ca - common).elements())
        return lhs == rhs

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RootFraction({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, base: int | None = None) -> str:
        num = self.num.to_str(base)
        if not self.den:
            return num
        if len(self.num.terms) > 1:
            num = f"({num})"
        dens = []
        for k in self.den:
            t = _root_poly(self.datum, k).to_str(base)
            dens.append(t if len(_root_poly(self.datum, k).terms) == 1 else f"({t})")
        return f"{num}/({'*'.join(dens)})"

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(),
                "denominator_roots": [list(self.datum.positive_roots[k]) for k in self.den]}


def _as_fraction(datum, x):
    if isinstance(x, RootFraction):
        return x
    if isinstance(x, Poly):
        return RootFraction(datum, x, (), False)
    try:
        return RootFraction(datum, Poly.const(datum.n, x), (), False)
    except Exception:
        return None


def _cancel(datum, num: Poly, den: tuple):
    den = list(den)
    out = []
    for k in sorted(set(den)):
        cnt = den.count(k)
        coords = datum.positive_roots[k]
        while cnt:
            q = num.try_divide_linear(coords)
            if q is None:
                break
            num = q
            cnt -= 1
        out.extend([k] * cnt)
    return num, tuple(out)


def act_poly(table: GroupTable, k: int, p: Poly) -> Poly:
    if k == 0 or not p.terms:
        return p
    mat = table.matrices[k]
    n = p.n
    forms = [tuple(mat[r][j] for r in range(n)) for j in range(n)]
    return p.substitute_linear(forms)


def act_fraction(table: GroupTable, k: int, f: RootFraction) -> RootFraction:
    """w(f) for the table element with index k."""
    if k == 0 or not f.num.terms:
        return f
    num = act_poly(table, k, f.num)
    if not f.den:
        return RootFraction(f.datum, num, (), False)
    perm = table.root_action(k)
    sign = 1
    den = []
    for b in f.den:
        idx, sg = perm[b]
        den.append(idx)
        sign *= sg
    if sign < 0:
        num = -num
    return RootFraction(f.datum, num, tuple(sorted(den)), False)


class QWElement:
    """Finitely supported sum of coefficient * delta_w (coefficients on the left)."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: GroupTable, coeffs: dict | None = None):
        self.table = table
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @property
    def datum(self):
        return self.table.datum

    @classmethod
    def delta(cls, table: GroupTable, k: int, coeff=None) -> "QWElement":
        d = table.datum
        c = RootFraction.one(d) if coeff is None else _as_fraction(d, coeff)
        return cls(table, {k: c})

    @classmethod
    def scalar(cls, table: GroupTable, coeff) -> "QWElement":
        return cls.delta(table, 0, coeff)

    def items(self):
        return self.coeffs.items()

    def coefficient(self, k: int) -> RootFraction:
        return self.coeffs.get(k, RootFraction.zero(self.datum))

    def __add__(self, other: "QWElement") -> "QWElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return QWElement(self.table, out)

    def __neg__(self):
        return QWElement(self.table, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def lmul(self, q) -> "QWElement":
        """q * self for a scalar q."""
        q = _as_fraction(self.datum, q)
        return QWElement(self.table, {k: q * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, QWElement):
            # right multiplication by a scalar: p delta_w * q = p w(q) delta_w
            q = _as_fraction(self.datum, other)
            return QWElement(self.table, {k: v * act_fraction(self.table, k, q)
                                          for k, v in self.coeffs.items()})
        t = self.table
        out: dict = {}
        for w, p in self.coeffs.items():
            for v, q in other.coeffs.items():
                key = t.mul(w, v)
                term = p * act_fraction(t, w, q)
                out[key] = out[key] + term if key in out else term
        return QWElement(t, out)

    def __rmul__(self, q):
        return self.lmul(q)

    def __eq__(self, other):
        if not isinstance(other, QWElement):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __repr__(self):
        return "QWElement(" + ", ".join(
            f"{v}*d{list(self.table.words[k])}" for k, v in sorted(self.coeffs.items())) + ")"

    def circ(self, p):
        """The action z o p = sum c_w * w(p); returns a Poly when the result is polynomial."""
        d = self.datum
        f = _as_fraction(d, p)
        total = RootFraction.zero(d)
        for k, c in self.coeffs.items():
            total = total + c * act_fraction(self.table, k, f)
        return total.num if total.is_polynomial() else total

    def to_json(self) -> list[dict]:
        return [dict(word=list(self.table.words[k]), **v.to_json())
                for k, v in sorted(self.coeffs.items())]


# -- nil-Hecke elements

def element_X_simple(table: GroupTable, i: int) -> QWElement:
    d = table.datum
    inv = RootFraction.inverse_root(d, i - 1)
    return QWElement(table, {0: inv, table.simple(i): -inv})


def element_Y_simple(table: GroupTable, i: int) -> QWElement:
    d = table.datum
    inv = RootFraction.inverse_root(d, i - 1)
    return QWElement(table, {0: -inv, table.simple(i): inv})


def element_from_word(table: GroupTable, word, kind: str = "Y") -> QWElement:
    make = element_Y_simple if kind == "Y" else element_X_simple
    out = QWElement.delta(table, 0)
    for i in word:
        out = out * make(table, i)
    return out


def element_Y(table: GroupTable, w: int) -> QWElement:
    return element_from_word(table, table.words[w], "Y")


def element_X(table: GroupTable, w: int) -> QWElement:
    return element_from_word(table, table.words[w], "X")


def affine_relation_check(table: GroupTable, w: int, lam, kind: str = "X") -> bool:
    """X_w * lam == w(lam) X_w + sum over w' -> w by beta of beta^vee(lam) X_{w'}.

    The Y-version carries a minus sign on the correction terms.
    """
    d = table.datum
    lam_poly = Poly.linear(lam)
    make = element_X if kind == "X" else element_Y
    xw = make(table, w)
    lhs = xw * lam_poly
    rhs = xw.lmul(act_poly(table, w, lam_poly))
    sign = 1 if kind == "X" else -1
    for v, b in table.down_edges(w):
        coef = d.pairing(d.positive_roots[b], lam)
        if coef:
            rhs = rhs + make(table, v).lmul(sign * coef)
    return lhs == rhs


# -- transition coefficients

def c_row_by_expansion(table: GroupTable):
    """All rows of C: rows[w] = {v: c_{w,v}}, from Y_w = Y_i Y_{s_i w}."""
    d = table.datum
    rows: list[dict] = [None] * table.order
    rows[0] = {0: RootFraction.one(d)}
    for w in range(1, table.order):
        i = table.words[w][0]
        prev = rows[table.left[w][i - 1]]
        si = table.simple(i)
        inv = RootFraction.inverse_root(d, i - 1)
        # coefficient of delta_x in Y_i * sum c_y delta_y: (s_i(c_{s_i x}) - c_x)/alpha_i
        support = set(prev) | {table.left[y][i - 1] for y in prev}
        row = {}
        for x in support:
            a = prev.get(table.left[x][i - 1])
            b = prev.get(x)
            val = RootFraction.zero(d)
            if a is not None:
                val = act_fraction(table, si, a)
            if b is not None:
                val = val - b
            val = val * inv
            if val:
                row[x] = val
        rows[w] = row
    return rows


def c_by_subsequences(table: GroupTable, w: int, v: int, word=None) -> RootFraction:
    """Coefficient of delta_v in Y_w from the sum over all subsequences of a reduced word."""
    d = table.datum
    word = tuple(table.words[w] if word is None else word)
    r = len(word)
    total = RootFraction.zero(d)
    # depth-first over include/exclude choices, tracking the chosen prefix element
    stack = [(0, 0, RootFraction.one(d))]
    while stack:
        pos, elem, acc = stack.pop()
        if pos == r:
            if elem == v:
                total = total + acc
            continue
        i = word[pos]
        # beta = (chosen prefix)(alpha_i); 1/beta factor for every position
        idx, sg = table.root_action(elem)[i - 1]
        factor = RootFraction.inverse_root(d, idx, sg)
        nxt = acc * factor
        stack.append((pos + 1, table.right[elem][i - 1], nxt))
        stack.append((pos + 1, elem, -nxt))
    return total


def billey_d(table: GroupTable, u: int, v: int, word=None) -> Poly:
    """d_{u,v} as the sum over reduced subwords for u of products of beta_k."""
    return billey_column(table, v, word).get(u, Poly.zero(table.n))


def billey_column(table: GroupTable, v: int, word=None) -> dict[int, Poly]:
    """{u: d_{u,v}} for all u, enumerating reduced subwords of a reduced word of v."""
    d = table.datum
    word = tuple(table.words[v] if word is None else word)
    r = len(word)
    betas = []
    prefix = 0
    for i in word:
        betas.append(Poly.linear(table.act(prefix, d.simple_root(i))))
        prefix = table.right[prefix][i - 1]
    out: dict[int, Poly] = {}
    lens = table.lengths

    def walk(pos, elem, acc):
        if pos == r:
            out[elem] = out[elem] + acc if elem in out else acc
            return
        walk(pos + 1, elem, acc)
        i = word[pos]
        nxt = table.right[elem][i - 1]
        if lens[nxt] > lens[elem]:
            walk(pos + 1, nxt, acc * betas[pos])

    walk(0, 0, Poly.one(d.n))
    return {k: p for k, p in out.items() if p}


def d_by_recursion(table: GroupTable) -> list[dict[int, Poly]]:
    """Columns {w: d_{w,v}} from d_{w,v s_i} = d_{w,v} + [s_i in D_R(w)] v(alpha_i) d_{w s_i, v}.

    Uses the largest right descent of each v, a different path from the canonical word.
    """
    d = table.datum
    cols: list[dict] = [None] * table.order
    cols[0] = {0: Poly.one(d.n)}
    for v in range(1, table.order):
        i = max(table.right_descents(v))
        vp = table.right[v][i - 1]
        beta = Poly.linear(table.act(vp, d.simple_root(i)))
        prev = cols[vp]
        col = dict(prev)
        for w in list(prev):
            ws = table.right[w][i - 1]
            if table.lengths[ws] > table.lengths[w]:
                term = beta * prev[w]
                col[ws] = col[ws] + term if ws in col else term
        cols[v] = {k: p for k, p in col.items() if p}
    return cols


def fundamental_weight_poly(datum, i: int) -> Poly:
    return Poly.linear(datum.fundamental_weight(i))


def d_simple(table: GroupTable, i: int, v: int) -> Poly:
    """d_{s_i,v} = omega_i - v(omega_i), asserted integral."""
    d = table.datum
    om = d.fundamental_weight(i)
    diff = tuple(normalize(a - b) for a, b in zip(om, table.act(v, om)))
    p = Poly.linear(diff)
    if not p.is_integral():
        raise InvariantViolation(f"d_(s_{i},v) is not integral: {p}")
    return p


class TransitionMatrices:
    """C (c_{w,v}, the delta-coefficients of Y_w) and D (d_{w,v}, xi_w = sum d_{w,v} psi_v)."""

    def __init__(self, table: GroupTable):
        self.table = table
        self.datum = table.datum
        self._c_rows = None
        self._d_cols = None

    @property
    def c_rows(self) -> list[dict]:
        if self._c_rows is None:
            self._c_rows = c_row_by_expansion(self.table)
        return self._c_rows

    @property
    def d_cols(self) -> list[dict]:
        if self._d_cols is None:
            self._d_cols = [billey_column(self.table, v) for v in range(self.table.order)]
        return self._d_cols

    def c(self, w: int, v: int) -> RootFraction:
        return self.c_rows[w].get(v, RootFraction.zero(self.datum))

    def d(self, w: int, v: int) -> Poly:
        return self.d_cols[v].get(w, Poly.zero(self.datum.n))

    def check_c(self, w: int, v: int) -> RootFraction:
        """c_{w,v} two ways; disagreement is an invariant violation."""
        a = self.c(w, v)
        b = c_by_subsequences(self.table, w, v)
        if a != b:
            raise InvariantViolation(f"c_(w,v) mismatch for w={self.table.words[w]} v={self.table.words[v]}")
        return a

    def product_c_dt(self, w: int, v: int) -> RootFraction:
        """(C D^t)_{w,v} = sum_x c_{w,x} d_{v,x}."""
        total = RootFraction.zero(self.datum)
        col = self.c_rows[w]
        for x, c in col.items():
            dv = self.d_cols[x].get(v)
            if dv is not None:
                total = total + c * dv
        return total

    def row_times_dt_is_identity(self, w: int) -> bool:
        """Row w of C D^t, checked with the row's common denominator cleared."""
        d = self.datum
        row = self.c_rows[w]
        common = Counter()
        for f in row.values():
            common |= Counter(f.den)
        scaled = {x: f.num * _prod_roots(d, (common - Counter(f.den)).elements())
                  for x, f in row.items()}
        target = _prod_roots(d, common.elements())
        acc: dict = {}
        for x, p in scaled.items():
            for v, dv in self.d_cols[x].items():
                term = p * dv
                acc[v] = acc[v] + term if v in acc else term
        acc = {v: p for v, p in acc.items() if p}
        return set(acc) == {w} and acc[w] == target


# -- dual elements (psi coordinates)

class DualElement:
    """f = sum f_w psi_w with f(delta_w) = f_w; products are pointwise."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: GroupTable, coeffs: dict | None = None):
        self.table = table
        d = table.datum
        self.coeffs = {k: _as_fraction(d, v) for k, v in (coeffs or {}).items() if v}

    def value(self, k: int) -> RootFraction:
        return self.coeffs.get(k, RootFraction.zero(self.table.datum))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return DualElement(self.table, out)

    def __sub__(self, other):
        return self + DualElement(self.table, {k: -v for k, v in other.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, DualElement):
            return DualElement(self.table, {k: v * other.coeffs[k] for k, v in self.coeffs.items()
                                            if k in other.coeffs})
        q = _as_fraction(self.table.datum, other)
        return DualElement(self.table, {k: q * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DualElement):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.value(k) == other.value(k) for k in keys)

    def evaluate(self, z: QWElement) -> RootFraction:
        """f(z) for z = sum q_v delta_v, Q-linear: sum q_v f(delta_v)."""
        total = RootFraction.zero(self.table.datum)
        for k, q in z.coeffs.items():
            if k in self.coeffs:
                total = total + q * self.coeffs[k]
        return total

    def to_json(self) -> list[dict]:
        return [dict(word=list(self.table.words[k]), **v.to_json())
                for k, v in sorted(self.coeffs.items())]


def psi(table: GroupTable, w: int) -> DualElement:
    return DualElement(table, {w: 1})


def hecke_act(z: QWElement, f: DualElement) -> DualElement:
    """(q delta_v . f)(delta_w) = w(q) f(delta_{wv})."""
    t = z.table
    out: dict = {}
    for v, q in z.coeffs.items():
        vinv = t.inv[v]
        for y, fy in f.coeffs.items():
            w = t.mul(y, vinv)
            term = act_fraction(t, w, q) * fy
            out[w] = out[w] + term if w in out else term
    return DualElement(t, out)


def schubert_in_group_basis(tm: TransitionMatrices, w: int) -> DualElement:
    """xi_w = sum_v d_{w,v} psi_v."""
    t = tm.table
    return DualElement(t, {v: tm.d(w, v) for v in range(t.order) if tm.d(w, v)})


def is_parabolic_invariant(f: DualElement, J) -> bool:
    t = f.table
    return all(hecke_act(QWElement.delta(t, t.simple(j)), f) == f for j in J)


def psi_times_xi(tm: TransitionMatrices, u: int, v: int) -> dict[int, RootFraction]:
    """psi_u . xi_v = sum_w c_{w,u} d_{v,u} xi_w."""
    duv = tm.d(v, u)
    out = {}
    if not duv:
        return out
    for w in range(tm.table.order):
        c = tm.c_rows[w].get(u)
        if c is not None:
            out[w] = c * duv
    return out


__all__ = [
    "RootFraction", "QWElement", "DualElement", "TransitionMatrices",
    "element_X", "element_Y", "element_X_simple", "element_Y_simple", "element_from_word",
    "affine_relation_check", "c_row_by_expansion", "c_by_subsequences", "billey_d",
    "billey_column", "d_by_recursion", "d_simple", "hecke_act", "psi",
    "schubert_in_group_basis", "is_parabolic_invariant", "psi_times_xi", "act_fraction",
    "act_poly", "root_poly", "NotDivisibleError",
]
