import random

import pytest

from orbitcat import _pykernels, group_preset, kernels
from orbitcat.group_core import SubgroupLattice

try:
    from orbitcat import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


@needs_ext
@pytest.mark.parametrize("name", ["S3", "D4", "A4", "S4"])
def test_backends_agree(name):
    G = group_preset(name)
    n = G.order
    mul = kernels.int_table(x for row in G.mul for x in row)
    inv = kernels.int_table(G.inv)
    rng = random.Random(n)
    for _ in range(30):
        gens = rng.sample(range(n), rng.randint(1, 3))
        a = _pykernels.closure(mul, n, gens)
        assert a == list(_ckernels.closure(mul, n, gens))
        g = rng.randrange(n)
        assert _pykernels.conjugate(mul, inv, n, a, g) == list(_ckernels.conjugate(mul, inv, n, a, g))
        big = kernels.int_table(int(x in set(a)) for x in range(n))
        small = _pykernels.closure(mul, n, [rng.randrange(n)])
        assert _pykernels.count_conjugators(mul, inv, n, small, big) == \
            _ckernels.count_conjugators(mul, inv, n, small, big)
    X = [tuple(p) for p in G.perms]
    act = kernels.int_table(x for row in X for x in row)
    deg = len(X[0])
    for sub in G.lattice.subgroups:
        assert _pykernels.fixed_points(act, deg, sub.members) == list(_ckernels.fixed_points(act, deg, sub.members))
    gens = list(G.generators)
    assert list(_pykernels.orbit_labels(act, deg, gens)) == list(_ckernels.orbit_labels(act, deg, gens))


@needs_ext
def test_lattices_agree_across_backends():
    before = kernels.BACKEND
    try:
        results = {}
        for backend in ("python", "cython"):
            kernels.use(backend)
            G = group_preset("S4")
            lat = SubgroupLattice(G)
            results[backend] = ([s.members for s in lat.subgroups], list(lat.weyl_order), lat.mobius_table)
        assert results["python"] == results["cython"]
    finally:
        kernels.use(before)


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")
