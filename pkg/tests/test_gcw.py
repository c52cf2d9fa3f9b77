import pytest
from hypothesis import given, settings, strategies as st

from orbitcat import ConcreteGSet, group_preset
from orbitcat.burnside import format_burnside
from orbitcat.chain import fixed_subcomplex, g_split_check, homology, is_acyclic, quotient_complex
from orbitcat.gcw import (
    GSimplicialComplex,
    NotRegular,
    barycentric_subdivision,
    burnside_class,
    cellular_chain_complex,
    cone,
    euler_char,
    fixed_complex,
    full_simplex,
    point,
    simplex_boundary,
    validate_regular,
)
from orbitcat.group_core import gset_from_classes


@pytest.fixture(scope="module")
def S3():
    return group_preset("S3")


def test_regularity_examples(S3):
    triv = GSimplicialComplex(ConcreteGSet.trivial(S3, 3), [(0, 1), (1, 2)])
    assert validate_regular(triv) is None
    g, s = validate_regular(simplex_boundary(S3))
    assert len(s) == 2
    row = S3.perms[g]
    assert sorted(row[v] for v in s) == list(s) and [row[v] for v in s] != list(s)
    assert validate_regular(barycentric_subdivision(simplex_boundary(S3))) is None


def test_irregular_is_quarantined(S3):
    K = simplex_boundary(S3)
    for fn in (lambda: fixed_complex(K, S3.lattice.trivial), lambda: cellular_chain_complex(K),
               lambda: burnside_class(K)):
        with pytest.raises(NotRegular):
            fn()


def test_subdivision_examples(S3):
    assert barycentric_subdivision(point(S3)).f_vector() == [1]
    hexagon = barycentric_subdivision(simplex_boundary(S3))
    assert hexagon.f_vector() == [6, 6]
    assert barycentric_subdivision(full_simplex(S3)).f_vector() == [7, 12, 6]


def test_cone_examples(S3):
    assert cone(point(S3)).f_vector() == [2, 1]
    K = cone(barycentric_subdivision(simplex_boundary(S3)))
    assert K.f_vector() == [7, 12, 6]
    C = cellular_chain_complex(K, augmented=True)
    assert all(h.is_zero() for h in homology(C.underlying(), reduced=True).values())


def test_fixed_examples(S3):
    lat = S3.lattice
    hexagon = barycentric_subdivision(simplex_boundary(S3))
    assert fixed_complex(hexagon, lat.trivial).f_vector() == [6, 6]
    assert euler_char(hexagon) == 0
    F = fixed_complex(hexagon, lat.rep(1))
    assert F.f_vector() == [2] and F.euler_char() == 2
    assert fixed_complex(hexagon, lat.rep(2)).f_vector() == []
    assert euler_char(hexagon, lat.rep(2)) == 0


def test_chain_examples(S3):
    pt = cellular_chain_complex(point(S3))
    assert pt.dims() == [1]
    hexagon = barycentric_subdivision(simplex_boundary(S3))
    C = cellular_chain_complex(hexagon)
    for col in zip(*C.d[1]):
        assert sorted(x for x in col if x) == [-1, 1]


def test_burnside_class_examples(S3):
    assert format_burnside(burnside_class(point(S3))) == "[G/G]"
    x = burnside_class(barycentric_subdivision(simplex_boundary(S3)))
    assert format_burnside(x) == "-[G/1] + 2[G/C2]"
    assert x.marks().values == (0, 2, 0, 0)


def test_json_roundtrip(S3):
    K = barycentric_subdivision(simplex_boundary(S3))
    K2 = GSimplicialComplex.from_dict(S3, K.to_dict())
    assert K2.simplices == K.simplices and K2.vertices.act == K.vertices.act


def test_not_g_stable(S3):
    from orbitcat.group_core import InvalidAction

    with pytest.raises(InvalidAction):
        GSimplicialComplex(ConcreteGSet(S3, S3.perms), [(0, 1)])


# ---------------------------------------------------------------- generated complexes

GROUPS = {name: group_preset(name) for name in ["C2", "C3", "S3", "C2xC2"]}


@st.composite
def g_complexes(draw):
    G = GROUPS[draw(st.sampled_from(sorted(GROUPS)))]
    lat = G.lattice
    classes = draw(st.lists(st.integers(0, lat.num_classes - 1), min_size=1, max_size=3))
    X = gset_from_classes(lat, classes)
    if X.size > 8:
        X = gset_from_classes(lat, classes[:1])
    seeds = draw(st.lists(st.lists(st.integers(0, X.size - 1), min_size=1, max_size=3, unique=True),
                          min_size=1, max_size=2))
    simplices = {tuple(sorted(X.act[g][v] for v in s)) for s in seeds for g in range(G.order)}
    return GSimplicialComplex(X, simplices)


def _check_generated(K):
    G = K.group
    lat = G.lattice
    sd = barycentric_subdivision(K)
    assert validate_regular(sd) is None
    A = cone(sd)
    assert validate_regular(A) is None
    regular = validate_regular(K) is None
    for c in range(lat.num_classes):
        h = lat.rep(c)
        assert euler_char(A, h) == 1
        if regular:
            assert euler_char(sd, h) == euler_char(K, h)
    for L in (sd, A):
        marks = burnside_class(L).marks().values
        assert list(marks) == [euler_char(L, lat.rep(c)) for c in range(lat.num_classes)]
        C = cellular_chain_complex(L)
        for c in range(lat.num_classes):
            F = fixed_complex(L, lat.rep(c))
            assert fixed_subcomplex(C, lat.rep(c)).dims == F.f_vector() + [0] * (C.top + 1 - len(F.f_vector()))
    return A


@settings(max_examples=25, deadline=None)
@given(g_complexes())
def test_generated_properties(K):
    A = _check_generated(K)
    C = cellular_chain_complex(A, augmented=True)
    assert is_acyclic(C, reduced=True)
    assert is_acyclic(quotient_complex(C))
    cert = g_split_check(C)
    assert cert.verify()
