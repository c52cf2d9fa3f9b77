"""Modules over the orbit category of a family of subgroups.

A morphism ``G/V -> G/K`` is stored as the coset ``K g`` it sends ``V`` to;
this needs ``g V g^-1 <= K``, so morphisms are exactly the points of
``(G/K)^V``.  Composition is ``(K->W by h) o (V->K by g) = (V->W by h g)``.

Modules are contravariant functors (right modules over the orbit category),
recorded at one representative per family class.  For ``f: G/V -> G/K`` the
matrix ``M(f)`` maps ``M(K)`` to ``M(V)`` acting on column vectors, so
``M(f2 o f1) == M(f1) @ M(f2)``.  The Weyl group ``W = N_G(Q)/Q`` acts on
``M(Q)`` on the right through the automorphisms of ``G/Q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact_linalg import ZZ, Ring, identity, matmul, rref, smith_normal_form, transpose, zeros
from .group_core import ConcreteGSet, GroupError, SubgroupLattice, fixed_points, has_normal_sylow


class NotInFamily(GroupError):
    pass


class Family:
    """Subgroups closed under conjugation and under passing to subgroups."""

    def __init__(self, lat: SubgroupLattice, members, name="family"):
        self.lattice = lat
        self.name = name
        members = frozenset(lat.sub(h).index for h in members)
        for s in members:
            for i in lat.class_members[lat.class_of[s]]:
                if i not in members:
                    raise ValueError(f"{name} is not closed under conjugation")
            for t in lat.subgroups[: s + 1]:
                if t <= lat.subgroups[s] and t.index not in members:
                    raise ValueError(f"{name} is not closed under subgroups")
        self.members = members
        self.classes = tuple(sorted({lat.class_of[s] for s in members}))

    @classmethod
    def p_subgroups(cls, lat, p):
        def is_p_power(n):
            while n % p == 0:
                n //= p
            return n == 1

        return cls(lat, [s for s in lat.subgroups if is_p_power(s.order)], name=f"{p}-subgroups")

    @classmethod
    def all_subgroups(cls, lat):
        return cls(lat, lat.subgroups, name="all subgroups")

    def __contains__(self, h):
        return self.lattice.sub(h).index in self.members

    def rep(self, c):
        return self.lattice.rep(c)


@dataclass(frozen=True)
class Morphism:
    """The G-map ``G/V -> G/K`` sending the coset ``V`` to ``K g``."""

    source: int
    target: int
    g: int


def _coset_rep(G, members, g):
    return min(G.mul[k][g] for k in members)


def _maps_into(G, src, tgt, g):
    tmask = tgt.mask
    gi = G.inv[g]
    return all((tmask >> G.mul[G.mul[g][v]][gi]) & 1 for v in src.members)


class OrbitMorphismSet:
    def __init__(self, lat, source, target):
        G = lat.group
        self.lattice = lat
        self.source = lat.sub(source).index
        self.target = lat.sub(target).index
        src, tgt = lat.subgroups[self.source], lat.subgroups[self.target]
        reps = set()
        if tgt.order % src.order == 0:
            for g in range(G.order):
                if _maps_into(G, src, tgt, g):
                    reps.add(_coset_rep(G, tgt.members, g))
        self.morphisms = tuple(Morphism(self.source, self.target, g) for g in sorted(reps))

    def __len__(self):
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)

    def index(self, f: Morphism):
        return self.morphisms.index(f)

    def composition_table(self, other: "OrbitMorphismSet"):
        """``table[i, j]`` = index in ``Mor(source, other.target)`` of ``other[j] o self[i]``."""
        if other.source != self.target:
            raise ValueError("morphism sets are not composable")
        result = OrbitMorphismSet(self.lattice, self.source, other.target)
        return {(i, j): result.index(compose(self.lattice, f2, f1))
                for i, f1 in enumerate(self.morphisms)
                for j, f2 in enumerate(other.morphisms)}


def compose(lat, f2: Morphism, f1: Morphism) -> Morphism:
    """``f2 o f1`` for ``f1: G/U -> G/V`` and ``f2: G/V -> G/W``."""
    if f1.target != f2.source:
        raise ValueError("morphisms are not composable")
    G = lat.group
    g = G.mul[f2.g][f1.g]
    return Morphism(f1.source, f2.target, _coset_rep(G, lat.subgroups[f2.target].members, g))


def mor_set(family: Family, v, k) -> OrbitMorphismSet:
    lat = family.lattice
    for h in (v, k):
        if h not in family:
            raise NotInFamily(f"subgroup {lat.sub(h).index} is not in the {family.name}")
    return OrbitMorphismSet(lat, v, k)


def weyl_elements(lat, q):
    """Coset representatives of ``Q`` in ``N_G(Q)``, i.e. the automorphisms of ``G/Q``."""
    q = lat.sub(q)
    return [f.g for f in OrbitMorphismSet(lat, q, q)]


def weyl_product(lat, q, a, b):
    G = lat.group
    return _coset_rep(G, lat.sub(q).members, G.mul[a][b])


@dataclass
class WeylModule:
    """Finite free module over the ring with a right action of ``W_G(Q)``.

    ``action[w]`` is the matrix of ``n -> n.w`` on column vectors, so the
    matrix of ``w1 w2`` is ``action[w2] @ action[w1]``.
    """

    lattice: SubgroupLattice
    q: int
    ring: Ring
    dim: int
    action: dict

    @classmethod
    def trivial(cls, lat, q, ring=ZZ, dim=1):
        return cls(lat, lat.sub(q).index, ring, dim, {w: identity(dim) for w in weyl_elements(lat, q)})

    @classmethod
    def regular(cls, lat, q, ring=ZZ):
        ws = weyl_elements(lat, q)
        pos = {w: i for i, w in enumerate(ws)}
        action = {}
        for w in ws:
            A = zeros(len(ws), len(ws))
            for u in ws:
                A[pos[weyl_product(lat, q, u, w)]][pos[u]] = 1
            action[w] = A
        return cls(lat, lat.sub(q).index, ring, len(ws), action)

    def check(self):
        lat, q = self.lattice, self.q
        ws = weyl_elements(lat, q)
        if self.action[0] != identity(self.dim):
            return False
        for a in ws:
            for b in ws:
                lhs = self.action[weyl_product(lat, q, a, b)]
                if lhs != matmul(self.action[b], self.action[a], self.ring, self.dim):
                    return False
        return True


class OrbitModule:
    """Values at family class representatives plus a matrix per morphism."""

    def __init__(self, family: Family, ring: Ring, dims: dict, maps: dict):
        self.family = family
        self.ring = ring
        self.dims = dict(dims)
        self.maps = dict(maps)

    def value(self, c):
        return self.dims.get(c, 0)

    def rep_index(self, c):
        return self.family.lattice.reps[c]

    def __call__(self, f: Morphism):
        lat = self.family.lattice
        cs, ct = lat.class_of[f.source], lat.class_of[f.target]
        return self.maps[cs, ct, f.g]

    def morphisms(self):
        lat = self.family.lattice
        for cs in self.family.classes:
            for ct in self.family.classes:
                yield from OrbitMorphismSet(lat, lat.reps[cs], lat.reps[ct])

    def check_functoriality(self):
        lat = self.family.lattice
        classes = self.family.classes
        mors = {(a, b): OrbitMorphismSet(lat, lat.reps[a], lat.reps[b]).morphisms
                for a in classes for b in classes}
        for a in classes:
            ident = Morphism(lat.reps[a], lat.reps[a], 0)
            if self(ident) != identity(self.value(a)):
                return False
        for a in classes:
            for b in classes:
                for f1 in mors[a, b]:
                    for c in classes:
                        for f2 in mors[b, c]:
                            lhs = self(compose(lat, f2, f1))
                            rhs = matmul(self(f1), self(f2), self.ring, self.value(c))
                            if lhs != rhs:
                                return False
        return True

    def to_dict(self):
        lat = self.family.lattice
        names = lat.class_names
        return {
            "ring": str(self.ring),
            "family": self.family.name,
            "ranks": {names[c]: self.value(c) for c in self.family.classes},
            "maps": [
                {"source": names[cs], "target": names[ct], "g": g, "matrix": [[str(x) for x in r] for r in m]}
                for (cs, ct, g), m in sorted(self.maps.items())
            ],
        }


def fixed_point_module(X: ConcreteGSet, family: Family, ring=ZZ) -> OrbitModule:
    """``V -> R[X^V]``; a morphism given by ``g`` acts by ``x -> x.g``."""
    lat = family.lattice
    bases = {c: fixed_points(X, lat.rep(c)) for c in family.classes}
    pos = {c: {x: i for i, x in enumerate(b)} for c, b in bases.items()}
    dims = {c: len(b) for c, b in bases.items()}
    maps = {}
    for cs in family.classes:
        for ct in family.classes:
            for f in OrbitMorphismSet(lat, lat.reps[cs], lat.reps[ct]):
                A = zeros(dims[cs], dims[ct])
                for j, x in enumerate(bases[ct]):
                    A[pos[cs][X.act[f.g][x]]][j] = 1
                maps[cs, ct, f.g] = A
    return OrbitModule(family, ring, dims, maps)


def restriction(M: OrbitModule, q) -> WeylModule:
    lat = M.family.lattice
    q = lat.sub(q)
    c = lat.class_of[q.index]
    if q.index != lat.reps[c]:
        raise ValueError("restriction is taken at class representatives")
    action = {w: M.maps[c, c, w] for w in weyl_elements(lat, q)}
    return WeylModule(lat, q.index, M.ring, M.value(c), action)


@dataclass
class SplitModule:
    """``M(Q)/M(Q)_s`` with the induced Weyl action on its free part.

    Over ZZ the quotient is ``ZZ^rank`` plus the listed torsion factors.
    """

    q: int
    ring: Ring
    rank: int
    torsion: list = field(default_factory=list)
    action: dict = field(default_factory=dict)


def split_functor(M: OrbitModule, q) -> SplitModule:
    lat = M.family.lattice
    q = lat.sub(q)
    if q not in M.family:
        raise NotInFamily("Q must lie in the family")
    cq = lat.class_of[q.index]
    n = M.value(cq)
    gens = []  # images of M(f) for G/Q -> G/K with Q < K in the family
    for ck in M.family.classes:
        k = lat.rep(ck)
        if k.order <= q.order:
            continue
        for f in OrbitMorphismSet(lat, q, k):
            A = M.maps[cq, ck, f.g]
            gens.extend(transpose(A, M.value(ck)))
    gens = [g for g in gens if any(g)]
    ring = M.ring
    ws = weyl_elements(lat, q)
    if ring.is_field:
        R, pivots = rref(gens, ring, n)
        free = [j for j in range(n) if j not in set(pivots)]

        def project(v):
            v = list(v)
            for row, pc in zip(R, pivots):
                t = v[pc]
                if t:
                    v = [ring(a - t * b) for a, b in zip(v, row)]
            return [v[j] for j in free]

        action = {}
        for w in ws:
            A = M.maps[cq, cq, w]
            cols = [project([A[i][j] for i in range(n)]) for j in free]
            action[w] = transpose(cols, len(free))
        return SplitModule(q.index, ring, len(free), [], action)
    img = transpose(gens, n) if gens else [[] for _ in range(n)]
    snf = smith_normal_form(img, len(gens))
    r = snf.rank
    torsion = [d for d in snf.invariant_factors if d > 1]
    action = {}
    for w in ws:
        A = matmul(matmul(snf.Uinv, M.maps[cq, cq, w]), snf.U)
        action[w] = [row[r:] for row in A[r:]]
    return SplitModule(q.index, ring, n - r, torsion, action)


def extension_functor(N: WeylModule, family: Family) -> OrbitModule:
    """``E_Q(N) = N (x)_{R W} R[G/Q]``, one block of ``N`` per W-orbit on ``(G/Q)^V``."""
    lat = family.lattice
    G = lat.group
    q = lat.subgroups[N.q]
    if q not in family:
        raise NotInFamily("Q must lie in the family")
    ws = weyl_elements(lat, q)
    GQ = ConcreteGSet.coset_space(G, q.members)
    # point index -> least element of the coset
    coset_min = [None] * GQ.size
    for g in range(G.order):
        x = GQ.act[g][0]
        if coset_min[x] is None or g < coset_min[x]:
            coset_min[x] = g

    def left(w, x):
        # w . (Q x) = Q (w x)
        return GQ.act[G.mul[w][coset_min[x]]][0]

    orbit_reps, decompose = {}, {}
    for c in family.classes:
        pts = fixed_points(GQ, lat.rep(c))
        reps, where = [], {}
        for x in pts:
            if x in where:
                continue
            reps.append(x)
            for w in ws:
                where[left(w, x)] = (len(reps) - 1, w)
        orbit_reps[c], decompose[c] = reps, where
    d = N.dim
    dims = {c: d * len(orbit_reps[c]) for c in family.classes}
    maps = {}
    for cs in family.classes:
        for ct in family.classes:
            for f in OrbitMorphismSet(lat, lat.reps[cs], lat.reps[ct]):
                A = zeros(dims[cs], dims[ct])
                for o, y in enumerate(orbit_reps[ct]):
                    o2, w = decompose[cs][GQ.act[f.g][y]]
                    Aw = N.action[w]
                    for i in range(d):
                        for j in range(d):
                            if Aw[j][i]:
                                A[o2 * d + j][o * d + i] = Aw[j][i]
                maps[cs, ct, f.g] = A
    return OrbitModule(family, N.ring, dims, maps)


def inclusion_functor(N: WeylModule, family: Family) -> OrbitModule:
    """``I_Q(N)``: the value ``N`` at ``[Q]`` and zero elsewhere."""
    lat = family.lattice
    cq = lat.class_of[N.q]
    if N.q not in family:
        raise NotInFamily("Q must lie in the family")
    dims = {c: (N.dim if c == cq else 0) for c in family.classes}
    maps = {}
    for cs in family.classes:
        for ct in family.classes:
            for f in OrbitMorphismSet(lat, lat.reps[cs], lat.reps[ct]):
                if cs == ct == cq:
                    maps[cs, ct, f.g] = N.action[f.g]
                else:
                    maps[cs, ct, f.g] = zeros(dims[cs], dims[ct])
    return OrbitModule(family, N.ring, dims, maps)


def n_HQ(lat: SubgroupLattice, h, q) -> int:
    """Number of ``N_G(Q)``-orbits on ``(G/H)^Q``."""
    G = lat.group
    h, q = lat.sub(h), lat.sub(q)
    X = ConcreteGSet.coset_space(G, h.members)
    fixed = set(fixed_points(X, q))
    norm = lat.normalizer(q).members
    seen, orbits = set(), 0
    for x in sorted(fixed):
        if x in seen:
            continue
        orbits += 1
        seen.update(X.act[n][x] for n in norm)
    return orbits


def is_projective_orbit_basis(lat: SubgroupLattice, h, p) -> bool:
    """Projectivity of ``R[G/H]`` over the p-subgroup orbit category, by the normal Sylow criterion."""
    return has_normal_sylow(lat, h, p)
