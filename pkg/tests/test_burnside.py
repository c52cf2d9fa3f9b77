import random

import pytest
from hypothesis import given, settings, strategies as st

from orbitcat import ConcreteGSet, group_preset, orbit_decomposition, product_gset
from orbitcat.group_core import GroupError
from orbitcat.burnside import (
    BurnsideElement,
    SuperClassFunction,
    burnside_mul,
    conlon_equal,
    eta,
    format_burnside,
    gamma,
    obs_moduli,
    parse_burnside,
    psi,
    rho,
    rho_solve,
    table_of_marks,
    theta,
    theta_inv,
)
from tests.conftest import SMALL
from tests.oracles import coset_marks


def scf(lat, values):
    return SuperClassFunction(lat, tuple(values))


def test_marks_examples(S3):
    assert table_of_marks(group_preset("C", 1)).rows == ((1,),)
    assert table_of_marks(group_preset("C2")).rows == ((2, 0), (1, 1))
    assert [list(r) for r in table_of_marks(S3).rows] == [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]


@pytest.mark.parametrize("name", SMALL + ["S4"])
def test_marks_against_cosets(name):
    G = group_preset(name)
    lat = G.lattice
    tom = table_of_marks(lat)
    for c in range(lat.num_classes):
        for d in range(lat.num_classes):
            assert tom[c, d] == coset_marks(G, lat.rep(c).members, lat.rep(d).members)


def test_rho_examples(S3):
    lat = S3.lattice
    assert rho(BurnsideElement.one(lat)).values == (1, 1, 1, 1)
    X = parse_burnside(lat, "[G/1]+2[G/G]")
    Y = parse_burnside(lat, "2[G/C2]+[G/C3]")
    assert rho(X).values == (8, 2, 2, 2)
    assert rho(Y).values == (8, 2, 2, 0)


def test_rho_solve_examples(S3):
    lat = S3.lattice
    assert rho_solve(scf(lat, (1, 1, 1, 1))) == BurnsideElement.one(lat)
    x = rho_solve(scf(lat, (0, 0, 0, 2)))
    assert format_burnside(x) == "[G/1] - 2[G/C2] - [G/C3] + 2[G/G]"
    C2 = group_preset("C2").lattice
    assert rho_solve(scf(C2, (1, 0))) is None


def test_theta_examples(S3):
    lat = S3.lattice
    assert theta_inv(scf(lat, (0, 0, 0, 1))).values == (1, 1, 1, 1)
    assert theta_inv(scf(lat, (6, -2, -2, 2))).values == (0, 0, 0, 2)


def test_eta_gamma(S3):
    lat = S3.lattice
    assert eta(BurnsideElement.one(lat)).values == (0, 0, 0, 1)
    assert eta(BurnsideElement.basis(lat, 0)).values == (6, 0, 0, 0)
    assert obs_moduli(S3) == (6, 1, 2, 1)
    assert gamma(scf(lat, (12, 5, -4, 3))).is_zero()


def test_mul_examples(S3):
    lat = S3.lattice
    c2 = BurnsideElement.basis(lat, 1)
    assert burnside_mul(c2, c2) == parse_burnside(lat, "[G/1]+[G/C2]")
    x = parse_burnside(lat, "3[G/1] - [G/C3]")
    assert x * BurnsideElement.one(lat) == x


@pytest.mark.parametrize("name", ["S3", "D4", "A4"])
def test_mul_against_product_gsets(name):
    G = group_preset(name)
    lat = G.lattice
    sets = [ConcreteGSet.coset_space(G, lat.rep(c).members) for c in range(lat.num_classes)]
    for a in range(lat.num_classes):
        for b in range(lat.num_classes):
            prod = burnside_mul(BurnsideElement.basis(lat, a), BurnsideElement.basis(lat, b))
            assert prod == orbit_decomposition(product_gset(sets[a], sets[b]))


def test_conlon_examples(S3):
    lat = S3.lattice
    X = parse_burnside(lat, "[G/1]+2[G/G]")
    Y = parse_burnside(lat, "2[G/C2]+[G/C3]")
    assert conlon_equal(X, X, 2)
    assert conlon_equal(X, Y, 2)
    assert not conlon_equal(X, Y, 3)
    assert not conlon_equal(BurnsideElement.one(lat), BurnsideElement.basis(lat, 2), 2)


def test_parse_format_roundtrip(S3):
    lat = S3.lattice
    for text in ["[G/1] + 2[G/G]", "-[G/C2]", "0", "3[G/1] - [G/C3] + [G/G]"]:
        assert format_burnside(parse_burnside(lat, text)) == text
    with pytest.raises(GroupError):
        parse_burnside(lat, "[G/C7]")
    with pytest.raises(ValueError):
        parse_burnside(lat, "[G/1] [G/G]")


@pytest.mark.parametrize("name", ["S3", "C4", "D4", "A4", "Q8", "D6"])
def test_diagram_identities(name):
    G = group_preset(name)
    lat = G.lattice
    n = lat.num_classes
    rng = random.Random(name)
    for _ in range(50):
        f = scf(lat, [rng.randint(-9, 9) for _ in range(n)])
        assert theta(theta_inv(f)) == f
        assert theta_inv(theta(f)) == f
        x = BurnsideElement(lat, tuple(rng.randint(-4, 4) for _ in range(n)))
        y = BurnsideElement(lat, tuple(rng.randint(-4, 4) for _ in range(n)))
        assert psi(rho(x)).is_zero()
        assert rho_solve(rho(x)) == x
        assert rho(x * y) == rho(x) * rho(y)
        assert (rho_solve(f) is not None) == psi(f).is_zero()
        # points with stabilizer exactly K come in blocks of |W(K)|
        assert theta(rho(x)) == eta(x)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_theta_inverse_property(values):
    lat = group_preset("S3").lattice
    f = scf(lat, values)
    assert theta_inv(theta(f)) == f
