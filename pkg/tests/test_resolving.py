import pytest

from orbitcat import group_preset
from orbitcat.burnside import SuperClassFunction, format_burnside, rho
from orbitcat.group_core import prime_factors
from orbitcat.resolving import (
    PPowerOrder,
    integral_resolving_lattice,
    is_integral_resolving,
    is_resolving,
    lemma_criterion,
    m_integral,
    m_p,
    m_p_closed_form,
    oliver_burnside_element,
    realizable_fixed_euler,
    resolving_lattice,
)
from tests.conftest import CATALOG


def scf(lat, values):
    return SuperClassFunction(lat, tuple(values))


def test_is_resolving_examples(S3):
    lat = S3.lattice
    assert is_resolving(scf(lat, (0, 0, 0, 0)), 2)
    cert = is_resolving(scf(lat, (6, -2, -2, 2)), 2)
    assert cert and cert.verify()
    bad = is_resolving(scf(lat, (6, -2, -1, 1)), 2)
    assert not bad
    assert bad.failure == (2, "divisibility")
    assert bad.to_dict()["failure"] == {"class": "C3", "condition": "divisibility"}


def test_lattice_examples(S3):
    L = resolving_lattice(S3, 2)
    assert [list(v.values) for v in L.basis] == [[6, -2, -2, 2]]
    triv = group_preset("C", 1)
    assert resolving_lattice(triv, 2).rank == 0
    assert integral_resolving_lattice(triv).rank == 0


@pytest.mark.parametrize("name", CATALOG)
def test_lattice_members_are_resolving(name):
    G = group_preset(name)
    for p in prime_factors(G.order):
        L = resolving_lattice(G, p)
        for v in L.basis:
            assert is_resolving(v, p)
            assert lemma_criterion(v, p)


def test_mp_pins():
    assert m_p(group_preset("C2"), 2) == 0
    assert m_p(group_preset("C3"), 3) == 0
    S3 = group_preset("S3")
    assert m_p(S3, 2) == 2 and m_p(S3, 3) == 0
    assert m_p(group_preset("A5"), 2) == 1
    assert m_p(group_preset("S4"), 2) == 2
    assert m_p(group_preset("A4"), 3) == 1


@pytest.mark.parametrize("name", CATALOG)
def test_mp_closed_form(name):
    G = group_preset(name)
    for p in prime_factors(G.order):
        assert m_p(G, p) == m_p_closed_form(G, p)


def test_m_integral():
    assert m_integral(group_preset("C2")) == 0
    assert m_integral(group_preset("C5")) == 0
    S3 = group_preset("S3")
    assert m_integral(S3) == 0
    for name in ["S4", "D6", "A5"]:
        G = group_preset(name)
        m = m_integral(G)
        for p in prime_factors(G.order):
            # the integral lattice sits inside every mod p lattice
            mp = m_p(G, p)
            assert m % mp == 0 if mp else m == 0
        for v in integral_resolving_lattice(G).basis:
            assert is_integral_resolving(v)
            assert all(is_resolving(v, p) for p in prime_factors(G.order))


def test_realizable(S3):
    assert realizable_fixed_euler(S3, 2, 1)
    assert realizable_fixed_euler(S3, 2, 3)
    assert not realizable_fixed_euler(S3, 2, 2)
    A5 = group_preset("A5")
    assert all(realizable_fixed_euler(A5, 2, chi) for chi in range(-5, 6))
    with pytest.raises(PPowerOrder):
        realizable_fixed_euler(group_preset("D4"), 2, 1)


def test_oliver_element(S3):
    lat = S3.lattice
    x = oliver_burnside_element(scf(lat, (0, 0, 0, 0)), 2)
    assert format_burnside(x) == "[G/G]"
    x = oliver_burnside_element(scf(lat, (6, -2, -2, 2)), 2)
    assert format_burnside(x) == "[G/1] - 2[G/C2] - [G/C3] + 3[G/G]"
    assert rho(x).values == (1, 1, 1, 3)
    with pytest.raises(ValueError):
        oliver_burnside_element(scf(lat, (6, -2, -1, 1)), 2)


@pytest.mark.parametrize("name", ["S4", "A5", "D6"])
def test_oliver_marks_on_lattice(name):
    G = group_preset(name)
    lat = G.lattice
    for p in prime_factors(G.order):
        for phi in resolving_lattice(G, p).basis:
            marks = rho(oliver_burnside_element(phi, p)).values
            assert marks[-1] == 1 + phi.values[-1]
