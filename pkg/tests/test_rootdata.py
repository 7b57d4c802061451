import random
from fractions import Fraction

import pytest

from nilhecke.coeffring import number_ring, sign_of
from nilhecke.errors import InvalidTypeError
from nilhecke.rootdata import coxeter_exponent, parse_type, root_datum

TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "H3", "H4",
         "I2(5)", "I2(7):normalized", "I2(8):polarized", "I2(6):polarized", "I2(3):polarized"]


def test_cartan_examples():
    assert root_datum("A2").cartan == ((2, -1), (-1, 2))
    assert root_datum("G2").cartan == ((2, -3), (-1, 2))
    assert root_datum("B2").cartan == ((2, -2), (-1, 2))
    t5 = number_ring(5).gen
    assert root_datum("I2(5)").cartan == ((2, -t5), (-t5, 2))


def test_polarized_is_the_integral_form_at_m6():
    assert root_datum("I2(6):polarized").cartan == root_datum("G2").cartan
    assert root_datum("I2(4):polarized").cartan == root_datum("B2").cartan


def test_coxeter_exponents():
    assert coxeter_exponent(((2, 0), (0, 2)), 0, 1) == 2
    assert coxeter_exponent(((2, -3), (-1, 2)), 0, 1) == 6
    d = root_datum("I2(8):polarized")
    assert d.coxeter_exponent(1, 2) == 8


@pytest.mark.parametrize("name,count", [("A2", 6), ("B2", 8), ("I2(5)", 10), ("G2", 12), ("H3", 30),
                                        ("F4", 48), ("E6", 72), ("D4", 24), ("H4", 120)])
def test_root_counts(name, count):
    assert 2 * len(root_datum(name).positive_roots) == count


def test_b2_positive_roots():
    assert set(root_datum("B2").positive_roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}


@pytest.mark.parametrize("name", TYPES)
def test_reflections_preserve_roots(name):
    d = root_datum(name)
    roots = d.all_roots()
    for beta in d.positive_roots:
        for r in roots:
            assert d.is_root(d.reflect(beta, r))
    assert len(roots) == 2 * len(d.positive_roots)
    assert all(d.is_root(tuple(-x for x in b)) for b in d.positive_roots)
    for b in d.positive_roots:
        assert {sign_of(x) for x in b} - {0} == {1}


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "I2(5)", "H3"])
def test_reflection_formula_matches_coordinates(name):
    d = root_datum(name)
    rng = random.Random(7)
    for _ in range(100):
        beta = rng.choice(d.positive_roots)
        lam = tuple(rng.randint(-4, 4) for _ in range(d.n))
        k = d.pairing(beta, lam)
        assert d.reflect(beta, lam) == tuple(l - k * b for l, b in zip(lam, beta))
        assert d.pairing(beta, beta) == 2


def test_pairings():
    d = root_datum("A2")
    assert d.pair_simple(1, (1, 0)) == -1
    for i in range(2):
        for j in range(2):
            assert d.pair_simple(i, d.fundamental_weight(j + 1)) == (1 if i == j else 0)


def test_fundamental_weights_and_index():
    d = root_datum("A2")
    assert d.fundamental_weight(1) == (Fraction(2, 3), Fraction(1, 3))
    assert d.lattice_index == 3
    assert root_datum("I2(5)").lattice_index == 5


def test_lattice_membership():
    d = root_datum("A2")
    w = root_datum("A2@weight")
    om = d.fundamental_weight(1)
    assert not d.in_lattice(om) and w.in_lattice(om)
    assert d.in_lattice((1, -2))


@pytest.mark.parametrize("bad", ["D3", "E9", "G3", "I2(5):polarized", "I2(1)", "Z2", "A0", "B1"])
def test_invalid_types(bad):
    with pytest.raises(InvalidTypeError):
        root_datum(parse_type(bad))


def test_type_grammar():
    assert parse_type("I2(7)").family == "I2-normalized"
    assert parse_type("H3@weight").lattice == "weight"
    assert parse_type("b2").family == "B"
