import pytest
from hypothesis import settings

from nilhecke.coeffring import qdiv
from nilhecke.polyops import Poly
from nilhecke.rootdata import root_datum
from nilhecke.twistedalg import RootFraction, root_poly
from nilhecke.weyl import generate

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def table(name):
    return generate(root_datum(name))


@pytest.fixture(scope="session")
def A2():
    return table("A2")


@pytest.fixture(scope="session")
def A3():
    return table("A3")


@pytest.fixture(scope="session")
def B2():
    return table("B2")


@pytest.fixture(scope="session")
def G2():
    return table("G2")


@pytest.fixture(scope="session")
def I25():
    return table("I2(5)")


def inverse_lower_triangular(t, tm):
    """C^{-1} by forward substitution in length order."""
    d = t.datum
    inv = {}
    order = sorted(range(t.order), key=lambda k: t.lengths[k])
    for v in order:
        col = {}
        for w in order:
            acc = RootFraction.one(d) if w == v else RootFraction.zero(d)
            for x, c in tm.c_rows[w].items():
                if x != w and x in col:
                    acc = acc - c * col[x]
            cww = tm.c(w, w)
            # 1/c_ww = (prod of its denominator roots) / constant numerator
            recip = Poly.one(t.n)
            for b in cww.den:
                recip = recip * root_poly(d, b)
            const = cww.num.constant_term()
            recip = recip.map_coefficients(lambda c, k=const: qdiv(c, k))
            val = acc * RootFraction.from_poly(d, recip)
            if val:
                col[w] = val
        inv[v] = col
    return inv
