"""Finite simplicial complexes with a simplicial right G-action."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .burnside import BurnsideElement
from .chain import SpecialComplex
from .exact_linalg import ZZ, Ring, zeros
from .group_core import (
    ConcreteGSet,
    FiniteGroup,
    InvalidAction,
    Subgroup,
    orbit_decomposition,
)


class NotRegular(ValueError):
    """Some element fixes a simplex setwise without fixing it pointwise."""

    def __init__(self, witness):
        g, simplex = witness
        super().__init__(f"element {g} fixes simplex {list(simplex)} setwise but not pointwise")
        self.witness = witness


def _close(simplices):
    out = set()
    for s in simplices:
        s = tuple(sorted(set(s)))
        if not s:
            continue
        for k in range(1, len(s) + 1):
            out.update(combinations(s, k))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Plain finite simplicial complex; simplices are sorted vertex tuples."""

    simplices: tuple

    @classmethod
    def from_simplices(cls, simplices):
        return cls(tuple(sorted(_close(simplices), key=lambda s: (len(s), s))))

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def f_vector(self):
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts

    def euler_char(self):
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def vertices(self):
        return sorted(s[0] for s in self.simplices if len(s) == 1)


class GSimplicialComplex:
    """Vertex G-set plus a G-stable, face-closed family of simplices."""

    def __init__(self, vertices: ConcreteGSet, simplices, *, check=True):
        self.vertices = vertices
        self.group: FiniteGroup = vertices.group
        closed = _close(simplices)
        closed.update((v,) for v in range(vertices.size))
        self.simplices = tuple(sorted(closed, key=lambda s: (len(s), s)))
        self._index = {s: i for i, s in enumerate(self.simplices)}
        if check:
            for g in self.group.generators:
                for s in self.simplices:
                    if self.image(s, g) not in self._index:
                        raise InvalidAction(f"simplex {list(s)} is not carried to a simplex by {g}")

    def __repr__(self):
        return f"<GSimplicialComplex f={self.f_vector()}>"

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def image(self, simplex, g):
        row = self.vertices.act[g]
        return tuple(sorted(row[v] for v in simplex))

    def skeleton(self, k):
        return [s for s in self.simplices if len(s) == k + 1]

    def f_vector(self):
        return [len(self.skeleton(k)) for k in range(self.dimension + 1)]

    def euler_char(self):
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def simplex_gset(self, k) -> ConcreteGSet:
        """The k-simplices as a G-set, in the order of ``skeleton(k)``."""
        cells = self.skeleton(k)
        index = {s: i for i, s in enumerate(cells)}
        act = [[index[self.image(s, g)] for s in cells] for g in range(self.group.order)]
        return ConcreteGSet(self.group, act, check=False)

    @cached_property
    def is_regular(self):
        return validate_regular(self) is None

    def underlying(self) -> SimplicialComplex:
        return SimplicialComplex(self.simplices)

    def to_dict(self):
        G = self.group
        return {
            "vertices": self.vertices.size,
            "action": [list(self.vertices.act[g]) for g in G.generators],
            "simplices": [list(s) for s in self.simplices if self._is_maximal(s)],
        }

    def _is_maximal(self, s):
        ss = set(s)
        return not any(len(t) == len(s) + 1 and ss <= set(t) for t in self.simplices)

    @classmethod
    def from_dict(cls, group: FiniteGroup, data):
        n = int(data["vertices"])
        action = [list(r) for r in data.get("action", [])]
        if len(action) == group.order and len(action) != len(group.generators):
            X = ConcreteGSet(group, action)
        else:
            X = ConcreteGSet.from_generator_images(group, n, action)
        if X.size != n:
            raise InvalidAction("vertex count does not match the action")
        return cls(X, data.get("simplices", []))


def validate_regular(K: GSimplicialComplex):
    """None when K is regular, else a witness ``(g, simplex)``.

    Every group element is tried: a setwise-stable simplex can be moved
    by all generators and still be reversed by a product of them.
    """
    for g in range(1, K.group.order):
        row = K.vertices.act[g]
        for s in K.simplices:
            if len(s) < 2:
                continue
            img = [row[v] for v in s]
            if sorted(img) == list(s) and img != list(s):
                return g, s
    return None


def _require_regular(K):
    witness = validate_regular(K)
    if witness is not None:
        raise NotRegular(witness)


def barycentric_subdivision(K: GSimplicialComplex) -> GSimplicialComplex:
    """Vertices are the simplices of K; simplices are strictly increasing chains."""
    cells = list(K.simplices)
    index = {s: i for i, s in enumerate(cells)}
    act = [[index[K.image(s, g)] for s in cells] for g in range(K.group.order)]
    V = ConcreteGSet(K.group, act, check=False)
    cofaces = {i: [] for i in range(len(cells))}
    for i, s in enumerate(cells):
        ss = set(s)
        for j, t in enumerate(cells):
            if len(t) > len(s) and ss <= set(t):
                cofaces[i].append(j)
    maximal = []

    def extend(chain):
        ups = cofaces[chain[-1]]
        if not ups:
            maximal.append(tuple(chain))
            return
        for j in ups:
            if len(cells[j]) == len(cells[chain[-1]]) + 1:
                extend(chain + [j])

    for i, s in enumerate(cells):
        if len(s) == 1:
            extend([i])
    return GSimplicialComplex(V, maximal, check=False)


def cone(K: GSimplicialComplex) -> GSimplicialComplex:
    """Join with a new G-fixed apex, appended as the last vertex."""
    n = K.vertices.size
    act = [tuple(row) + (n,) for row in K.vertices.act]
    V = ConcreteGSet(K.group, act, check=False)
    simplices = list(K.simplices) + [s + (n,) for s in K.simplices] + [(n,)]
    return GSimplicialComplex(V, simplices, check=False)


def _members(h):
    return h.members if isinstance(h, Subgroup) else list(h)


def fixed_complex(K: GSimplicialComplex, h) -> SimplicialComplex:
    """Simplices fixed pointwise by every element of H."""
    _require_regular(K)
    members = _members(h)
    fixed = set(v for v in range(K.vertices.size) if all(K.vertices.act[g][v] == v for g in members))
    return SimplicialComplex(tuple(s for s in K.simplices if fixed.issuperset(s)))


def euler_char(K: GSimplicialComplex, h=None) -> int:
    if h is None:
        return K.euler_char()
    return fixed_complex(K, h).euler_char()


def cellular_chain_complex(K: GSimplicialComplex, ring=ZZ, augmented=False) -> SpecialComplex:
    """Simplicial chains with orientations transported from orbit representatives."""
    _require_regular(K)
    ring = Ring.parse(ring)
    G = K.group
    top = max(K.dimension, 0)
    skeleta = [K.skeleton(k) for k in range(top + 1)]
    index = [{s: i for i, s in enumerate(cells)} for cells in skeleta]
    orient = {}
    for cells in skeleta:
        for s in cells:
            if s in orient:
                continue
            for g in range(G.order):
                row = K.vertices.act[g]
                t = tuple(row[v] for v in s)
                key = tuple(sorted(t))
                if key not in orient:
                    orient[key] = t

    def sign(t, ref):
        pos = {v: i for i, v in enumerate(ref)}
        perm = [pos[v] for v in t]
        parity = 0
        seen = [False] * len(perm)
        for i in range(len(perm)):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                parity += length - 1
        return -1 if parity % 2 else 1

    bases = [K.simplex_gset(k) for k in range(top + 1)] if K.simplices else [ConcreteGSet.trivial(G, 0)]
    boundaries = []
    for k in range(1, top + 1):
        D = zeros(len(skeleta[k - 1]), len(skeleta[k]))
        for j, s in enumerate(skeleta[k]):
            o = orient[s]
            for drop in range(len(o)):
                face = o[:drop] + o[drop + 1:]
                key = tuple(sorted(face))
                D[index[k - 1][key]][j] += (-1) ** drop * sign(face, orient[key])
        boundaries.append(D)
    aug = [1] * bases[0].size if augmented else None
    return SpecialComplex(bases, boundaries, ring, aug)


def burnside_class(K: GSimplicialComplex) -> BurnsideElement:
    """Alternating sum of the orbit decompositions of the k-simplex G-sets."""
    _require_regular(K)
    lat = K.group.lattice
    total = BurnsideElement.zero(lat)
    for k in range(K.dimension + 1):
        term = orbit_decomposition(K.simplex_gset(k))
        total = total + term if k % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------- builders

def from_permutation_group(G: FiniteGroup, simplices) -> GSimplicialComplex:
    """G acting on vertices through its defining permutations."""
    if G.perms is None:
        raise InvalidAction("group has no defining permutation representation")
    return GSimplicialComplex(ConcreteGSet(G, [tuple(p) for p in G.perms]), simplices)


def full_simplex(G: FiniteGroup) -> GSimplicialComplex:
    n = len(G.perms[0])
    return from_permutation_group(G, [tuple(range(n))])


def simplex_boundary(G: FiniteGroup) -> GSimplicialComplex:
    """Boundary of the simplex on the permuted points."""
    n = len(G.perms[0])
    return from_permutation_group(G, list(combinations(range(n), n - 1)))


def point(G: FiniteGroup) -> GSimplicialComplex:
    return GSimplicialComplex(ConcreteGSet.trivial(G, 1), [(0,)])
