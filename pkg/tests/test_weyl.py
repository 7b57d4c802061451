from itertools import product

import pytest

from nilhecke.errors import CapExceededError
from nilhecke.rootdata import root_datum
from nilhecke.weyl import GroupTable, WeylElement, group_order, is_reduced

from conftest import table


@pytest.mark.parametrize("name,order", [("A3", 24), ("I2(5)", 10), ("G2", 12), ("B3", 48),
                                        ("H3", 120), ("D4", 192), ("F4", 1152)])
def test_orders(name, order):
    assert table(name).order == order == group_order(root_datum(name))


def test_cap(monkeypatch):
    monkeypatch.setenv("NILHECKE_GROUP_CAP", "40")
    with pytest.raises(CapExceededError):
        GroupTable(root_datum("B3"))


def test_reduced_words(A2, A3):
    assert A2.all_reduced_words(0) == [()] or list(A2.all_reduced_words(0)) == [()]
    assert set(A2.all_reduced_words(A2.longest)) == {(1, 2, 1), (2, 1, 2)}
    words = set(A3.all_reduced_words(A3.longest))
    assert len(words) == 16
    brute = {w for w in product((1, 2, 3), repeat=6) if A3.from_word(w) == A3.longest}
    assert words == brute


def test_canonical_word_is_lex_least(A3):
    for k in range(A3.order):
        assert A3.words[k] == min(A3.all_reduced_words(k))


def test_descents(A2):
    assert not A2.left_descents(0) and not A2.right_descents(0)
    w = A2.from_word((1, 2))
    assert A2.left_descents(w) == {1} and A2.right_descents(w) == {2}
    for name in ("A3", "B2", "G2", "H3"):
        t = table(name)
        assert t.left_descents(t.longest) == set(range(1, t.n + 1))


def _bruhat_closure(t):
    """u <= w as the transitive closure of length-raising reflection steps."""
    refl = {t.mul(t.mul(x, t.simple(i)), t.inv[x]) for x in range(t.order) for i in range(1, t.n + 1)}
    below = {w: {w} for w in range(t.order)}
    for w in sorted(range(t.order), key=lambda k: t.lengths[k]):
        for r in refl:
            v = t.mul(w, r)
            if t.lengths[v] < t.lengths[w]:
                below[w] |= below[v]
    return below


@pytest.mark.parametrize("name", ["A3", "B2", "G2", "I2(5)", "B3"])
def test_bruhat_against_closure(name):
    t = table(name)
    below = _bruhat_closure(t)
    for u in range(t.order):
        for w in range(t.order):
            assert t.bruhat_leq(u, w) == (u in below[w])
            if name in ("A3", "B2"):
                assert t.bruhat_leq_subword(u, w) == (u in below[w])
        assert t.lower_ideal(u) == frozenset(below[u])


def test_bruhat_examples(A2):
    s1, s2 = A2.simple(1), A2.simple(2)
    assert A2.bruhat_leq(s1, A2.from_word((2, 1)))
    assert not A2.bruhat_leq(s2, s1)


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(7)"])
def test_length_laws(name):
    t = table(name)
    for w in range(t.order):
        for i in range(1, t.n + 1):
            assert abs(t.lengths[t.right[w][i - 1]] - t.lengths[w]) == 1
    for u in range(0, t.order, 7):
        for v in range(t.order):
            uv = t.mul(u, v)
            assert t.lengths[uv] <= t.lengths[u] + t.lengths[v]
            if t.lengths[uv] == t.lengths[u] + t.lengths[v]:
                assert is_reduced(t.datum, t.words[u] + t.words[v])


def test_inversion_sets(A2):
    assert A2.inversion_set(0) == []
    d = A2.datum
    for i in (1, 2):
        assert [d.positive_roots[b] for b in A2.inversion_set(A2.simple(i))] == [d.simple_root(i)]
    w = A2.from_word((2, 1))
    assert {d.positive_roots[b] for b in A2.inversion_set(w)} == {(0, 1), (1, 1)}


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "H3"])
def test_inversion_sets_brute(name):
    t = table(name)
    d = t.datum
    pos = set(d.positive_roots)
    for w in range(t.order):
        inv = {r for r in pos if not d.is_root(r) or
               tuple(-x for x in t.act(t.inv[w], r)) in pos}
        assert {d.positive_roots[b] for b in t.inversion_set(w)} == inv


def test_root_origins(A3):
    d = A3.datum
    for beta, (word, i) in zip(d.positive_roots, d.root_origin):
        assert A3.act(A3.from_word(word), d.simple_root(i)) == beta


def test_coset_reps(A2, A3):
    assert A2.minimal_coset_reps([]) == list(range(A2.order))
    assert A2.minimal_coset_reps([1, 2]) == [0]
    assert {A2.words[k] for k in A2.minimal_coset_reps([2])} == {(), (1,), (2, 1)}
    for J in ([1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]):
        assert len(A3.minimal_coset_reps(J)) * len(A3.parabolic_subgroup(J)) == A3.order


def test_weyl_element_standalone():
    d = root_datum("A8")
    w = WeylElement.from_word(d, (1, 5, 4, 3, 2, 3, 4))
    assert w.length == 7
    assert w == WeylElement.from_word(d, w.reduced_word())
    assert (w * w.inverse()) == WeylElement.identity(d)
