"""Kumar's criterion: smooth and rationally smooth points of Schubert varieties.

c_{w,v} = (-1)^{l(w)-l(v)} c'_{w,v} / prod_{beta in S(w,v)} beta with
S(w,v) = {beta > 0 : s_beta v <= w}. v is a smooth point of X(w) iff c'_{w,v} = 1,
and rationally smooth iff c'_{w,y} is a positive integer for every v <= y <= w.
Outside crystallographic types the verdicts are reported as "formal".
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffring import is_integral, sign_of
from .errors import InvariantViolation, NilHeckeError
from .polyops import Poly
from .structconst import transition_matrices
from .twistedalg import RootFraction, c_by_subsequences
from .weyl import GroupTable


def _require_leq(table: GroupTable, v: int, w: int):
    if not table.bruhat_leq(v, w):
        raise NilHeckeError(f"{list(table.words[v])} is not below {list(table.words[w])} in Bruhat order")


def s_set(table: GroupTable, w: int, v: int) -> list[int]:
    """Positive-root indices beta with s_beta v <= w."""
    _require_leq(table, v, w)
    refl = table.reflection_of_root
    return [b for b, r in enumerate(refl) if table.bruhat_leq(table.mul(r, v), w)]


def c_prime(table: GroupTable, w: int, v: int, check: bool = False) -> Poly:
    """The normalized coefficient c'_{w,v}; ``check`` recomputes c_{w,v} by the subsequence sum."""
    S = s_set(table, w, v)
    d = table.datum
    c = transition_matrices(table).c(w, v)
    if check and c != c_by_subsequences(table, w, v):
        raise InvariantViolation("the two computations of c_(w,v) disagree")
    scaled = c * RootFraction(d, _roots_product(d, S), (), False)
    if not scaled.is_polynomial():
        raise InvariantViolation(f"c'_(w,v) is not a polynomial: {scaled}")
    out = scaled.num
    if (table.lengths[w] - table.lengths[v]) % 2:
        out = -out
    deg = len(S) - table.lengths[w]
    if not out or not out.is_homogeneous() or out.degree() != deg:
        raise InvariantViolation(f"c'_(w,v) has degree {out.degree()}, expected {deg}")
    return out


def _roots_product(d, idx) -> Poly:
    p = Poly.one(d.n)
    for b in idx:
        p = p * Poly.linear(d.positive_roots[b])
    return p


def _positive_integer(p: Poly) -> bool:
    if not p.is_constant():
        return False
    c = p.constant_term()
    ok, _ = is_integral(c)
    if not ok:
        return False
    coords = getattr(c, "coords", None)
    if coords is not None and any(coords[1:]):
        return False
    return sign_of(c) > 0


def is_smooth_point(table: GroupTable, w: int, v: int) -> bool:
    return c_prime(table, w, v) == Poly.one(table.n)


def is_rationally_smooth_point(table: GroupTable, w: int, v: int) -> bool:
    _require_leq(table, v, w)
    ok = True
    for y in table.interval(v, w):
        cp = c_prime(table, w, y)
        if cp.is_constant():
            _assert_positive_constant(table, cp)
        if not _positive_integer(cp):
            ok = False
    return ok


def _assert_positive_constant(table: GroupTable, cp: Poly) -> None:
    # constant values are positive integers in crystallographic types
    if table.datum.is_crystallographic and not _positive_integer(cp):
        raise InvariantViolation(f"constant c' = {cp} is not a positive integer")


def verdict_kind(table: GroupTable) -> str:
    return "geometric" if table.datum.is_crystallographic else "formal"


@dataclass(frozen=True)
class SmoothnessReport:
    w: int
    v: int
    s_set: tuple
    c_prime: Poly
    smooth: bool
    rationally_smooth: bool | None
    kind: str

    def to_json(self, table: GroupTable, base: int | None = None) -> dict:
        d = table.datum
        return {
            "w": list(table.words[self.w]),
            "v": list(table.words[self.v]),
            "s_set": [list(_json_vec(d.positive_roots[b])) for b in self.s_set],
            "c_prime": self.c_prime.to_str(base),
            "smooth": self.smooth,
            "rationally_smooth": self.rationally_smooth,
            "verdict": self.kind,
        }


def _json_vec(v):
    from .coeffring import scalar_to_json
    return [scalar_to_json(x) for x in v]


def report(table: GroupTable, w: int, v: int = 0, rational: bool = True) -> SmoothnessReport:
    """Smoothness data at v; ``rational=False`` skips the interval walk."""
    cp = c_prime(table, w, v)
    if cp.is_constant():
        _assert_positive_constant(table, cp)
    rs = is_rationally_smooth_point(table, w, v) if rational else None
    return SmoothnessReport(w, v, tuple(s_set(table, w, v)), cp, cp == Poly.one(table.n),
                            rs, verdict_kind(table))


def parabolic_smooth(table: GroupTable, v: int, J) -> bool:
    """X^J(v) smooth iff c'_{v u0, e} = 1 with u0 the longest element of W_J."""
    J = set(J)
    if table.right_descents(v) & J:
        raise NilHeckeError(f"{list(table.words[v])} is not a minimal coset representative for J={sorted(J)}")
    u0 = table.longest_of(J) if J else 0
    return is_smooth_point(table, table.mul(v, u0), 0)


__all__ = [
    "s_set", "c_prime", "is_smooth_point", "is_rationally_smooth_point", "parabolic_smooth",
    "SmoothnessReport", "report", "verdict_kind",
]
