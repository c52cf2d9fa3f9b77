import pytest

from orbitcat import ConcreteGSet, group_preset
from orbitcat.burnside import table_of_marks
from orbitcat.exact_linalg import GF, QQ, ZZ
from orbitcat.group_core import prime_factors
from orbitcat.orbit_cat import (
    Family,
    NotInFamily,
    WeylModule,
    compose,
    extension_functor,
    fixed_point_module,
    inclusion_functor,
    is_projective_orbit_basis,
    mor_set,
    n_HQ,
    restriction,
    split_functor,
)
from tests.conftest import CATALOG


def test_mor_examples(S3):
    lat = S3.lattice
    fam = Family.p_subgroups(lat, 2)
    c2 = lat.rep(1)
    assert len(mor_set(fam, lat.trivial, c2)) == 3
    assert len(mor_set(fam, c2, c2)) == 1
    full = Family.all_subgroups(lat)
    assert len(mor_set(full, lat.rep(2), c2)) == 0
    with pytest.raises(NotInFamily):
        mor_set(fam, lat.rep(2), c2)


def test_family_closure(S3):
    lat = S3.lattice
    with pytest.raises(ValueError):
        Family(lat, [lat.rep(1)])  # missing the trivial subgroup and conjugates


@pytest.mark.parametrize("name", CATALOG)
def test_mor_counts_equal_marks(name):
    G = group_preset(name)
    lat = G.lattice
    tom = table_of_marks(lat)
    fam = Family.all_subgroups(lat)
    for v in range(lat.num_classes):
        for k in range(lat.num_classes):
            assert len(mor_set(fam, lat.rep(v), lat.rep(k))) == tom[k, v]


def test_composition_is_associative():
    G = group_preset("D4")
    lat = G.lattice
    fam = Family.all_subgroups(lat)
    reps = [lat.rep(c) for c in range(lat.num_classes)]
    for a in reps:
        for b in reps:
            for f1 in mor_set(fam, a, b):
                for c in reps:
                    for f2 in mor_set(fam, b, c):
                        for d in reps[-2:]:
                            for f3 in mor_set(fam, c, d):
                                assert compose(lat, f3, compose(lat, f2, f1)) == compose(lat, compose(lat, f3, f2), f1)


@pytest.mark.parametrize("name", ["S3", "D4", "A4", "C6"])
@pytest.mark.parametrize("ring", [ZZ, GF(2), QQ])
def test_fixed_point_module_functorial(name, ring):
    G = group_preset(name)
    lat = G.lattice
    for fam in (Family.all_subgroups(lat), Family.p_subgroups(lat, 2)):
        M = fixed_point_module(ConcreteGSet.regular(G), fam, ring)
        assert M.check_functoriality()
        pt = fixed_point_module(ConcreteGSet.trivial(G, 1), fam, ring)
        assert all(pt.value(c) == 1 for c in fam.classes)


@pytest.mark.parametrize("name", ["S3", "D4", "A4", "S4"])
def test_extension_and_split(name):
    G = group_preset(name)
    lat = G.lattice
    fam = Family.all_subgroups(lat)
    for c in fam.classes:
        q = lat.rep(c)
        N = WeylModule.regular(lat, q)
        assert N.check()
        E = extension_functor(N, fam)
        assert E.check_functoriality()
        # E_Q of the regular Weyl module is the free module on G/Q
        F = fixed_point_module(ConcreteGSet.coset_space(G, q.members), fam)
        assert all(E.value(d) == F.value(d) for d in fam.classes)
        assert split_functor(E, q).rank == N.dim
        T = WeylModule.trivial(lat, q)
        I = inclusion_functor(T, fam)
        assert I.check_functoriality()
        assert all(I.value(d) == 0 for d in fam.classes if d != c)
        assert restriction(I, q).dim == 1


def test_split_at_maximal(S3):
    lat = S3.lattice
    fam = Family.p_subgroups(lat, 2)
    M = fixed_point_module(ConcreteGSet.regular(S3), fam)
    c2 = lat.rep(1)
    S = split_functor(M, c2)
    assert S.rank == M.value(1) and not S.torsion


def test_split_over_zz_torsion():
    C2 = group_preset("C2")
    lat = C2.lattice
    fam = Family.all_subgroups(lat)
    # fixed points of a point: M(1) = Z is the image of M(G) = Z, so S_1 is zero
    M = fixed_point_module(ConcreteGSet.trivial(C2, 1), fam)
    assert split_functor(M, lat.trivial).rank == 0


def test_n_hq(S3):
    lat = S3.lattice
    c2 = lat.rep(1)
    assert n_HQ(lat, c2, lat.trivial) == 1
    assert n_HQ(lat, c2, c2) == 1
    assert n_HQ(lat, lat.whole, c2) == 1


def test_projectivity_examples(S3):
    lat = S3.lattice
    assert [is_projective_orbit_basis(lat, lat.rep(c), 2) for c in range(4)] == [True, True, True, False]
    D4 = group_preset("D4").lattice
    assert all(is_projective_orbit_basis(D4, s, 2) for s in D4.subgroups)


def test_module_export(S3):
    lat = S3.lattice
    X = ConcreteGSet.coset_space(S3, lat.rep(1).members)
    d = fixed_point_module(X, Family.p_subgroups(lat, 2)).to_dict()
    assert d["ranks"] == {"1": 3, "C2": 1}
    assert d["family"] == "2-subgroups"
