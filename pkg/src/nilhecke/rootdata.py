"""Cartan matrices, root systems and lattices for every finite type.

Conventions: the Cartan entry ``c[i][j]`` is the pairing of the coroot of
alpha_j with alpha_i, so the simple reflection acts by
``s_i(alpha_j) = alpha_j - c[j][i] * alpha_i``.  Vectors are tuples of
coordinates in the simple-root basis.  Public generator indices are
1-based (Bourbaki labelling); internal arrays are 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

import mpmath

from .coeffring import (AlgebraicNumber, NumberRing, normalize, number_ring,
                        qdiv, sign_of, to_float)
from .errors import CapExceededError, InvalidTypeError, InvariantViolation

Vector = tuple
DEFAULT_ORBIT_CAP = 10 ** 6

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "H", "I2-normalized", "I2-polarized")


@dataclass(frozen=True)
class RootDatumSpec:
    family: str
    rank: int
    m: int | None = None
    lattice: str = "root"

    def validate(self) -> None:
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4,
            "E": 6 <= n <= 8, "F": n == 4, "G": n == 2, "H": n in (3, 4),
            "I2-normalized": n == 2 and self.m is not None and self.m >= 2,
            "I2-polarized": n == 2 and self.m is not None and self.m >= 2
            and (self.m % 2 == 0 or self.m == 3),
        }.get(f, False)
        if not ok:
            raise InvalidTypeError(f"unsupported root datum: family={f} rank={n} m={self.m}")
        if self.lattice not in ("root", "weight"):
            raise InvalidTypeError(f"unknown lattice flavor {self.lattice!r}")

    @property
    def name(self) -> str:
        if self.family.startswith("I2"):
            base = f"I2({self.m}):{self.family.split('-')[1]}"
        else:
            base = f"{self.family}{self.rank}"
        return base if self.lattice == "root" else base + "@weight"


_TYPE_RE = re.compile(
    r"^\s*(?:(?P<fam>[A-HA-h])(?P<rank>\d+)|I2\((?P<m>\d+)\)(?::(?P<kind>normalized|polarized))?)"
    r"\s*(?:@(?P<lat>root|weight))?\s*$")


def parse_type(text: str) -> RootDatumSpec:
    """Parse ``A3``, ``I2(7):normalized``, ``H3@weight`` and friends."""
    mt = _TYPE_RE.match(text)
    if not mt:
        raise InvalidTypeError(f"cannot parse type {text!r}")
    lat = mt.group("lat") or "root"
    if mt.group("m"):
        kind = mt.group("kind") or "normalized"
        spec = RootDatumSpec(f"I2-{kind}", 2, int(mt.group("m")), lat)
    else:
        spec = RootDatumSpec(mt.group("fam").upper(), int(mt.group("rank")), None, lat)
    spec.validate()
    return spec


def _simply_laced_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family in ("A", "B", "C", "F", "H"):
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == "E":
        return [(0, 2), (2, 3), (3, 4)] + [(i, i + 1) for i in range(4, n - 1)] + [(1, 3)]
    return []


def build_cartan(spec: RootDatumSpec) -> tuple[NumberRing, tuple[tuple, ...]]:
    """Cartan matrix (Bourbaki labelling) and the coefficient ring it lives in."""
    spec.validate()
    f, n = spec.family, spec.rank
    if f == "H":
        ring = number_ring(5)
    elif f == "I2-normalized":
        ring = number_ring(spec.m)
    elif f == "I2-polarized":
        # entries lie in Z[tau_m^2] = Z[tau_{m/2}] since tau_m^2 = 2 + tau_{m/2}
        ring = number_ring(spec.m // 2) if spec.m >= 4 else number_ring(spec.m)
    else:
        ring = number_ring(3)
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for i, j in _simply_laced_edges(f, n):
        c[i][j] = c[j][i] = -1
    if f in ("B", "C"):
        # long -> short double bond; c[i][j] = -2 when alpha_i is the long root
        a, b = n - 2, n - 1
        if f == "B":
            c[a][b], c[b][a] = -2, -1
        else:
            c[a][b], c[b][a] = -1, -2
    elif f == "F":
        c[1][2], c[2][1] = -2, -1
    elif f == "G":
        c[0][1], c[1][0] = -3, -1
    elif f == "H":
        c[0][1] = c[1][0] = -ring.gen
    elif f == "I2-normalized":
        c[0][1] = c[1][0] = -ring.gen
    elif f == "I2-polarized":
        m = spec.m
        if m == 2:
            a, b = 0, 0
        elif m == 3:
            a, b = 1, 1
        else:
            a, b = 2 + ring.gen, 1
        c[0][1], c[1][0] = -a, -b
    out = tuple(tuple(normalize(x) for x in row) for row in c)
    for i in range(n):
        for j in range(n):
            if (out[i][j] == 0) != (out[j][i] == 0):
                raise InvalidTypeError(f"Cartan entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
                                       "must vanish together")
    return ring, out


def _mat_inverse(mat) -> list[list]:
    n = len(mat)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise InvariantViolation("Cartan matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [normalize(qdiv(x, p)) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                fct = a[r][col]
                a[r] = [normalize(x - fct * y) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _det(mat):
    a = [list(r) for r in mat]
    n = len(a)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                fct = qdiv(a[r][col], a[col][col])
                a[r] = [x - fct * y for x, y in zip(a[r], a[col])]
    return normalize(det)


class RootDatum:
    """A finite root datum over Z[tau_m]; the single source of reflections and pairings."""

    def __init__(self, spec: RootDatumSpec, orbit_cap: int = DEFAULT_ORBIT_CAP):
        spec.validate()
        self.spec = spec
        self.family = spec.family
        self.rank = self.n = spec.rank
        self.m = spec.m
        self.lattice = spec.lattice
        self.ring, self.cartan = build_cartan(spec)
        self.orbit_cap = orbit_cap
        self._build_roots()

    @property
    def name(self) -> str:
        return self.spec.name

    def __repr__(self):
        return f"RootDatum({self.name})"

    @property
    def is_crystallographic(self) -> bool:
        return self.family not in ("H", "I2-normalized", "I2-polarized") or all(
            isinstance(x, int) for row in self.cartan for x in row)

    # -- vectors
    def zero(self) -> Vector:
        return (0,) * self.n

    def simple_root(self, i: int) -> Vector:
        """alpha_i for 1-based i."""
        v = [0] * self.n
        v[i - 1] = 1
        return tuple(v)

    def pair_simple(self, i0: int, v: Vector):
        """alpha_{i0+1}^vee(v) for a 0-based index."""
        c = self.cartan
        s = 0
        for j, x in enumerate(v):
            if x:
                cj = c[j][i0]
                if cj:
                    s = s + cj * x
        return normalize(s)

    def reflect_simple(self, i0: int, v: Vector) -> Vector:
        k = self.pair_simple(i0, v)
        if not k:
            return v
        out = list(v)
        out[i0] = normalize(out[i0] - k)
        return tuple(out)

    def vector_sign(self, v: Vector) -> int:
        """Common sign of the coordinates of a root; mixed signs abort."""
        signs = {sign_of(x) for x in v} - {0}
        if len(signs) > 1:
            raise InvariantViolation(f"vector {v} has coordinates of mixed sign")
        return signs.pop() if signs else 0

    def _build_roots(self) -> None:
        n = self.n
        simple = [self.simple_root(i + 1) for i in range(n)]
        # each root stored with (word, i): root = s_word(alpha_i), and its coroot functional
        origin: dict[Vector, tuple[tuple[int, ...], int]] = {}
        coroot: dict[Vector, tuple] = {}
        queue = []
        for i, r in enumerate(simple):
            origin[r] = ((), i + 1)
            coroot[r] = tuple(self.cartan[j][i] for j in range(n))
            queue.append(r)
        head = 0
        while head < len(queue):
            r = queue[head]
            head += 1
            for j in range(n):
                s = self.reflect_simple(j, r)
                if s in origin:
                    continue
                f = coroot[r]
                fj = f[j]
                cof = tuple(normalize(f[k] - fj * self.cartan[k][j]) for k in range(n))
                word, i = origin[r]
                origin[s] = ((j + 1,) + word, i)
                coroot[s] = cof
                queue.append(s)
                if len(queue) > self.orbit_cap:
                    raise CapExceededError(f"root orbit exceeds cap {self.orbit_cap}")
        positives = []
        for r in queue:
            sg = self.vector_sign(r)
            if sg == 0:
                raise InvariantViolation("zero vector in root orbit")
            if sg > 0:
                positives.append(r)
        # deterministic order: by height under the embedding, then coordinates
        positives.sort(key=lambda r: (to_float(sum(r)), tuple(-to_float(x) for x in r)))
        self.positive_roots: list[Vector] = positives
        self.positive_index: dict[Vector, int] = {r: k for k, r in enumerate(positives)}
        self.root_origin = [origin[r] for r in positives]
        self.coroots = [coroot[r] for r in positives]
        self._all_roots = set(queue)

    @property
    def roots(self) -> list[Vector]:
        return self.positive_roots + [tuple(normalize(-x) for x in r) for r in self.positive_roots]

    def all_roots(self) -> set:
        return set(self._all_roots)

    def is_root(self, v: Vector) -> bool:
        return tuple(normalize(x) for x in v) in self._all_roots

    def root_lookup(self, v: Vector) -> tuple[int, int]:
        """(index into positive_roots, sign) for a root v."""
        k = self.positive_index.get(v)
        if k is not None:
            return k, 1
        k = self.positive_index.get(tuple(normalize(-x) for x in v))
        if k is None:
            raise InvariantViolation(f"{v} is not a root")
        return k, -1

    def coroot_of(self, beta: Vector) -> tuple:
        k, sg = self.root_lookup(beta)
        f = self.coroots[k]
        return f if sg > 0 else tuple(normalize(-x) for x in f)

    def pairing(self, beta: Vector, lam: Vector):
        """beta^vee(lam) for a root beta (simple-root coordinates)."""
        f = self.coroot_of(tuple(normalize(x) for x in beta))
        s = 0
        for a, b in zip(f, lam):
            if a and b:
                s = s + a * b
        return normalize(s)

    def reflect(self, beta: Vector, lam: Vector) -> Vector:
        k = self.pairing(beta, lam)
        return tuple(normalize(x - k * b) for x, b in zip(lam, beta))

    # -- matrices and weights
    def simple_reflection_matrix(self, i: int) -> tuple[tuple, ...]:
        """Matrix of s_i (1-based) on simple-root coordinates; columns are s_i(alpha_j)."""
        i0 = i - 1
        n = self.n
        rows = [[1 if r == cidx else 0 for cidx in range(n)] for r in range(n)]
        for j in range(n):
            rows[i0][j] = normalize(rows[i0][j] - self.cartan[j][i0])
        return tuple(tuple(r) for r in rows)

    @cached_property
    def cartan_inverse(self) -> list[list]:
        return _mat_inverse(self.cartan)

    def fundamental_weights(self) -> list[Vector]:
        """omega_i in simple-root coordinates (rows of the inverse Cartan matrix)."""
        return [tuple(row) for row in self.cartan_inverse]

    def fundamental_weight(self, i: int) -> Vector:
        return tuple(self.cartan_inverse[i - 1])

    @cached_property
    def cartan_determinant(self):
        return _det(self.cartan)

    @cached_property
    def lattice_index(self) -> int:
        d = self.cartan_determinant
        if isinstance(d, AlgebraicNumber):
            nm = d.norm()
        else:
            nm = d
        nm = abs(nm)
        assert nm.denominator == 1 if hasattr(nm, "denominator") else True
        return int(nm)

    def weight_to_root_coords(self, lam_weights: Vector) -> Vector:
        """Convert fundamental-weight coordinates to simple-root coordinates."""
        ci = self.cartan_inverse
        n = self.n
        return tuple(normalize(sum((lam_weights[i] * ci[i][j] for i in range(n)), 0))
                     for j in range(n))

    def root_to_weight_coords(self, v: Vector) -> Vector:
        # alpha_i = sum_j c_ij omega_j
        n = self.n
        return tuple(normalize(sum((v[i] * self.cartan[i][j] for i in range(n)), 0))
                     for j in range(n))

    def in_lattice(self, v: Vector) -> bool:
        """Membership in the root or weight lattice, per this datum's flavor."""
        from .coeffring import is_integral
        coords = v if self.lattice == "root" else self.root_to_weight_coords(v)
        return all(is_integral(x)[0] for x in coords)

    def coxeter_exponent(self, i: int, j: int) -> int:
        if i == j:
            return 1
        return coxeter_exponent(self.cartan, i, j)

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(tuple(self.coxeter_exponent(i + 1, j + 1) for j in range(n)) for i in range(n))

    @property
    def number_of_positive_roots(self) -> int:
        return len(self.positive_roots)


def coxeter_exponent(cartan, i: int, j: int) -> int:
    """m_ij with c_ij*c_ji = 4cos^2(pi/m_ij); indices 1-based."""
    if i == j:
        return 1
    p = normalize(cartan[i - 1][j - 1] * cartan[j - 1][i - 1])
    if not p:
        return 2
    with mpmath.workdps(50):
        if isinstance(p, AlgebraicNumber):
            tau = 2 * mpmath.cos(mpmath.pi / p.ring.m)
            val = sum(mpmath.mpf(c.numerator if hasattr(c, "numerator") else c)
                      / (c.denominator if hasattr(c, "denominator") else 1) * tau ** k
                      for k, c in enumerate(p.coords))
        else:
            val = mpmath.mpf(p)
        for m in range(3, 1001):
            if abs(4 * mpmath.cos(mpmath.pi / m) ** 2 - val) < mpmath.mpf(10) ** -30:
                return m
    raise InvalidTypeError(f"no Coxeter exponent matches c_ij*c_ji = {p}")


@lru_cache(maxsize=None)
def root_datum(spec: RootDatumSpec | str) -> RootDatum:
    """Cached constructor; accepts a spec or a type string."""
    if isinstance(spec, str):
        spec = parse_type(spec)
    return RootDatum(spec)


__all__ = [
    "RootDatumSpec", "RootDatum", "parse_type", "build_cartan", "root_datum",
    "coxeter_exponent", "FAMILIES",
]
