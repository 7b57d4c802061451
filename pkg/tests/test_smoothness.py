import pytest

from nilhecke.errors import NilHeckeError
from nilhecke.polyops import Poly
from nilhecke.smoothness import (c_prime, is_rationally_smooth_point, is_smooth_point, parabolic_smooth,
                                 report, s_set)
from nilhecke.structconst import transition_matrices
from nilhecke.twistedalg import RootFraction

from conftest import table


def test_3412_at_identity(A3):
    w = A3.from_word((2, 1, 3, 2))
    assert c_prime(A3, w, 0, check=True) == Poly.linear((1, 1, 1))
    assert not is_smooth_point(A3, w, 0)
    roots = sorted(A3.datum.positive_roots[b] for b in s_set(A3, w, 0))
    assert roots == [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 1, 0)]


def test_3412_c_value(A3):
    # c_{w,e} = (a1 + a2 + a3) / (a1 a2 a3 (a1 + a2)(a2 + a3))
    w = A3.from_word((2, 1, 3, 2))
    d = A3.datum
    c = transition_matrices(A3).c(w, 0)
    idx = [d.positive_roots.index(r) for r in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))]
    expect = RootFraction(d, Poly.linear((1, 1, 1)), tuple(sorted(idx)), False)
    assert c == expect


def test_3412_interval_values(A3):
    w = A3.from_word((2, 1, 3, 2))
    s2 = A3.simple(2)
    for v in A3.interval(0, w):
        cp = c_prime(A3, w, v)
        if v in (0, s2):
            assert cp == Poly.linear((1, 1, 1))
        else:
            assert cp == Poly.one(3)
    assert not is_rationally_smooth_point(A3, w, 0)
    assert is_rationally_smooth_point(A3, w, A3.from_word((2, 1, 3)))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "I2(5)"])
def test_c_prime_shape(name):
    t = table(name)
    for w in range(t.order):
        assert c_prime(t, w, w) == Poly.one(t.n)
        for v in t.lower_ideal(w):
            cp = c_prime(t, w, v, check=(t.order <= 12))
            assert cp.is_homogeneous()
            assert cp.degree() == len(s_set(t, w, v)) - t.lengths[w]


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_rank2_rationally_smooth(name):
    t = table(name)
    for w in range(t.order):
        assert is_rationally_smooth_point(t, w, 0)


def test_smooth_count_a3(A3):
    # in S4 exactly 3412 and 4231 are singular at e
    singular = {w for w in range(A3.order) if not is_smooth_point(A3, w, 0)}
    assert singular == {A3.from_word((2, 1, 3, 2)), A3.from_word((1, 2, 3, 2, 1))}


def test_report(A3, I25):
    w = A3.from_word((2, 1, 3, 2))
    r = report(A3, w)
    assert not r.smooth and r.rationally_smooth is False and r.kind == "geometric"
    js = r.to_json(A3, 1)
    assert js["c_prime"] == "a1 + a2 + a3" and js["verdict"] == "geometric"
    assert report(A3, w, rational=False).rationally_smooth is None
    assert report(I25, I25.longest).kind == "formal"


def test_parabolic_smooth(A3):
    # the Grassmannian Gr(2,4): Schubert cells indexed by minimal reps for J = {1, 3}
    J = (1, 3)
    reps = A3.minimal_coset_reps(J)
    verdicts = {A3.words[v]: parabolic_smooth(A3, v, J) for v in reps}
    assert len(verdicts) == 6
    assert verdicts[()] is True
    top = max(reps, key=lambda v: A3.lengths[v])
    assert parabolic_smooth(A3, top, J)
    # the single singular Schubert variety of Gr(2,4) is the divisor
    assert sum(1 for ok in verdicts.values() if not ok) == 1
    assert not verdicts[A3.words[A3.from_word((1, 3, 2))]]


def test_errors(A3):
    s1, s2 = A3.simple(1), A3.simple(2)
    with pytest.raises(NilHeckeError):
        c_prime(A3, s1, s2)
    with pytest.raises(NilHeckeError):
        s_set(A3, s1, s2)
    with pytest.raises(NilHeckeError):
        parabolic_smooth(A3, s1, (1,))
