"""Special G-complexes: chain complexes of based permutation modules whose
boundaries carry ``R[X^H]`` into ``R[Y^H]`` for every subgroup H.

Boundary ``d[i]`` maps degree i to degree i-1 and is stored as a
``|X_{i-1}| x |X_i|`` matrix acting on column vectors.  Equivariant maps are
parameterized by their values on one basis element per orbit, which makes
equivariance hold by construction in every solver below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_linalg import (
    ZZ,
    Ring,
    identity,
    is_zero,
    matmul,
    rank,
    smith_normal_form,
    solve_linear,
    transpose,
    zeros,
    nullspace,
)
from .group_core import ConcreteGSet, FiniteGroup, fixed_points


class ChainError(Exception):
    pass


class NotEquivariant(ChainError):
    def __init__(self, degree, what="boundary"):
        super().__init__(f"{what} in degree {degree} is not G-equivariant")
        self.degree = degree


class NotAdmissible(ChainError):
    def __init__(self, degree, class_id, what="boundary"):
        super().__init__(f"{what} in degree {degree} leaves the fixed-point span at class {class_id}")
        self.degree = degree
        self.class_id = class_id


class BoundarySquareNonzero(ChainError):
    def __init__(self, degree):
        super().__init__(f"d o d != 0 at degree {degree}")
        self.degree = degree


class NotAChainMap(ChainError):
    def __init__(self, degree):
        super().__init__(f"map does not commute with boundaries at degree {degree}")
        self.degree = degree


class NotQuasiIso(ChainError):
    """The map fails to be a homology isomorphism on some fixed subcomplex."""

    def __init__(self, class_id, degree, class_name=None):
        label = class_name if class_name is not None else class_id
        super().__init__(f"not a quasi-isomorphism on H-fixed points for H in class {label}, degree {degree}")
        self.class_id = class_id
        self.class_name = class_name
        self.degree = degree


class ConstructionFailed(AssertionError):
    pass


def _enc(x):
    """JSON value for an exact entry: ints stay ints, other rationals become strings."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _reduce(M, ring):
    return [[ring(x) for x in row] for row in M]


def _sub(A, B, ring):
    return [[ring(a - b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _add(A, B, ring):
    return [[ring(a + b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


@dataclass
class PlainComplex:
    """Complex of free modules: ``dims[i]`` and ``d[i]: R^dims[i] -> R^dims[i-1]``."""

    ring: Ring
    dims: list
    d: list  # d[0] is unused
    augmentation: list | None = None

    @property
    def top(self):
        return len(self.dims) - 1

    def boundary(self, i):
        if i <= 0 or i > self.top:
            rows = self.dims[i - 1] if 0 <= i - 1 <= self.top else 0
            cols = self.dims[i] if 0 <= i <= self.top else 0
            return zeros(rows, cols)
        return self.d[i]

    def to_dict(self):
        return {
            "ring": str(self.ring),
            "dims": list(self.dims),
            "boundaries": [[[_enc(x) for x in r] for r in self.d[i]] for i in range(1, len(self.dims))],
            "augmentation": None if self.augmentation is None else [_enc(x) for x in self.augmentation],
        }


@dataclass
class Homology:
    betti: int
    torsion: list = field(default_factory=list)

    def is_zero(self):
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("R" if self.betti == 1 else f"R^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _rank_and_torsion(M, ring, ncols):
    if ring.kind == "ZZ":
        snf = smith_normal_form(M, ncols)
        return snf.rank, [d for d in snf.invariant_factors if d > 1]
    return rank(M, ring, ncols), []


def homology(P: PlainComplex, ring=None, reduced=False) -> dict:
    """Homology per degree; with ``reduced`` the augmentation acts as ``d[0]``
    and degree -1 is reported as well."""
    ring = Ring.parse(ring) if ring is not None else P.ring
    n = P.top
    dims = list(P.dims)
    ranks, tors = {}, {}
    for i in range(1, n + 1):
        ranks[i], tors[i] = _rank_and_torsion(P.d[i], ring, dims[i])
    lo = 0
    if reduced:
        aug = P.augmentation if P.augmentation is not None else [1] * dims[0]
        ranks[0], tors[0] = _rank_and_torsion([list(aug)], ring, dims[0])
        lo = -1
    out = {}
    for i in range(lo, n + 1):
        dim = 1 if i == -1 else dims[i]
        r_out = ranks.get(i, 0)
        r_in = ranks.get(i + 1, 0)
        out[i] = Homology(dim - r_out - r_in, list(tors.get(i + 1, [])))
    return out


def is_acyclic(C, ring=None, reduced=False) -> bool:
    """Zero homology except ``H_0 = R``; with ``reduced``, the augmented complex is exact."""
    P = C.underlying() if isinstance(C, SpecialComplex) else C
    H = homology(P, ring, reduced)
    if reduced:
        return all(h.is_zero() for h in H.values())
    return all(h.is_zero() for i, h in H.items() if i != 0) and H[0].betti == 1 and not H[0].torsion


class SpecialComplex:
    """Validated special G-complex over ZZ, QQ or GF(p)."""

    def __init__(self, bases, boundaries, ring=ZZ, augmentation=None, *, validate=True):
        ring = Ring.parse(ring)
        if not bases:
            raise ChainError("a complex needs at least degree 0")
        self.ring = ring
        self.bases = list(bases)
        self.group: FiniteGroup = bases[0].group
        n = len(bases) - 1
        if len(boundaries) != n:
            raise ChainError(f"expected {n} boundary matrices, got {len(boundaries)}")
        self.d = [None] + [_reduce(B, ring) for B in boundaries]
        for i in range(1, n + 1):
            rows, cols = bases[i - 1].size, bases[i].size
            B = self.d[i]
            if len(B) != rows or any(len(r) != cols for r in B):
                raise ChainError(f"boundary {i} has the wrong shape")
        self.augmentation = None if augmentation is None else [ring(x) for x in augmentation]
        if self.augmentation is not None and len(self.augmentation) != bases[0].size:
            raise ChainError("augmentation has the wrong length")
        if validate:
            self.validate()

    @property
    def top(self):
        return len(self.bases) - 1

    @property
    def lattice(self):
        return self.group.lattice

    def dims(self):
        return [X.size for X in self.bases]

    def boundary(self, i):
        if 1 <= i <= self.top:
            return self.d[i]
        rows = self.bases[i - 1].size if 0 <= i - 1 <= self.top else 0
        cols = self.bases[i].size if 0 <= i <= self.top else 0
        return zeros(rows, cols)

    def basis(self, i):
        if 0 <= i <= self.top:
            return self.bases[i]
        return ConcreteGSet.trivial(self.group, 0)

    def validate(self):
        ring = self.ring
        for i in range(1, self.top + 1):
            check_equivariant(self.bases[i], self.bases[i - 1], self.d[i], i)
            check_admissible(self.bases[i], self.bases[i - 1], self.d[i], i)
        for i in range(2, self.top + 1):
            if not is_zero(matmul(self.d[i - 1], self.d[i], ring, self.bases[i].size)):
                raise BoundarySquareNonzero(i)
        if self.augmentation is not None:
            X0 = self.bases[0]
            for g in self.group.generators:
                if any(self.augmentation[X0.act[g][x]] != self.augmentation[x] for x in range(X0.size)):
                    raise NotEquivariant(0, "augmentation")
            if self.top >= 1 and not is_zero(matmul([self.augmentation], self.d[1], ring, self.bases[1].size)):
                raise BoundarySquareNonzero(1)
        return self

    def underlying(self) -> PlainComplex:
        return PlainComplex(self.ring, self.dims(), list(self.d), self.augmentation)

    def euler_characteristic(self):
        return sum((-1) ** i * X.size for i, X in enumerate(self.bases))

    def with_ring(self, ring):
        ring = Ring.parse(ring)
        return SpecialComplex(self.bases, [self.d[i] for i in range(1, self.top + 1)], ring,
                              self.augmentation, validate=False)

    def to_dict(self):
        gens = self.group.generators
        return {
            "ring": str(self.ring),
            "degrees": [{"size": X.size, "action": [list(X.act[g]) for g in gens]} for X in self.bases],
            "boundaries": [[[_enc(x) for x in r] for r in self.d[i]] for i in range(1, self.top + 1)],
            "augmentation": None if self.augmentation is None else [_enc(x) for x in self.augmentation],
        }


def check_equivariant(X, Y, A, degree, what="boundary"):
    G = X.group
    gens = G.generators or range(G.order)
    for g in gens:
        ax, ay = X.act[g], Y.act[g]
        for x in range(X.size):
            for y in range(Y.size):
                if A[ay[y]][ax[x]] != A[y][x]:
                    raise NotEquivariant(degree, what)


def check_admissible(X, Y, A, degree, what="boundary"):
    lat = X.group.lattice
    for c in range(lat.num_classes):
        h = lat.rep(c)
        fy = set(fixed_points(Y, h))
        for x in fixed_points(X, h):
            for y in range(Y.size):
                if A[y][x] and y not in fy:
                    raise NotAdmissible(degree, c, what)


def special_complex(bases, boundaries, ring=ZZ, augmentation=None) -> SpecialComplex:
    return SpecialComplex(bases, boundaries, ring, augmentation)


def fixed_subcomplex(C: SpecialComplex, h) -> PlainComplex:
    """Restriction of every boundary to the H-fixed basis elements."""
    fixed = [fixed_points(X, h) for X in C.bases]
    d = [None]
    for i in range(1, C.top + 1):
        B = C.d[i]
        d.append([[B[y][x] for x in fixed[i]] for y in fixed[i - 1]])
    aug = None
    if C.augmentation is not None:
        aug = [C.augmentation[x] for x in fixed[0]]
    return PlainComplex(C.ring, [len(f) for f in fixed], d, aug)


def quotient_complex(C: SpecialComplex) -> PlainComplex:
    """``C (x)_{ZG} Z``: one basis element per orbit, boundaries summed within orbits."""
    orbits = [X.orbits() for X in C.bases]
    where = []
    for orbs, X in zip(orbits, C.bases):
        w = [0] * X.size
        for k, o in enumerate(orbs):
            for x in o:
                w[x] = k
        where.append(w)
    d = [None]
    ring = C.ring
    for i in range(1, C.top + 1):
        B = C.d[i]
        Q = zeros(len(orbits[i - 1]), len(orbits[i]))
        for k, o in enumerate(orbits[i]):
            x = o[0]
            for y in range(C.bases[i - 1].size):
                if B[y][x]:
                    Q[where[i - 1][y]][k] = ring(Q[where[i - 1][y]][k] + B[y][x])
        d.append(Q)
    aug = None
    if C.augmentation is not None:
        aug = [C.augmentation[o[0]] for o in orbits[0]]
    return PlainComplex(ring, [len(o) for o in orbits], d, aug)


# ---------------------------------------------------------------- equivariant maps

class _OrbitData:
    """Orbit representative and a transporter ``g`` (``rep . g == x``) for each point."""

    def __init__(self, X: ConcreteGSet):
        G = X.group
        self.X = X
        self.rep = [-1] * X.size
        self.transporter = [-1] * X.size
        self.reps = []
        self.stabilizer = {}
        for x in range(X.size):
            if self.rep[x] != -1:
                continue
            self.reps.append(x)
            stab = []
            for g in range(G.order):
                y = X.act[g][x]
                if y == x:
                    stab.append(g)
                if self.rep[y] == -1:
                    self.rep[y] = x
                    self.transporter[y] = g
            self.stabilizer[x] = stab


def _param_images(src: _OrbitData, Y: ConcreteGSet, admissible: bool):
    """Basis of equivariant maps R[X] -> R[Y]: ``(x, support)`` pairs, where the
    basis map sends the orbit rep ``x`` to the sum over ``support``."""
    params = []
    for x in src.reps:
        stab = src.stabilizer[x]
        if admissible:
            for y in fixed_points(Y, stab):
                params.append((x, (y,)))
        else:
            seen = set()
            for y in range(Y.size):
                if y in seen:
                    continue
                orb = sorted({Y.act[h][y] for h in stab})
                seen.update(orb)
                params.append((x, tuple(orb)))
    return params


def equivariant_matrix(src: _OrbitData, Y: ConcreteGSet, images: dict, ring):
    """Full matrix of the equivariant map with ``x -> images[x]`` on orbit reps."""
    X = src.X
    A = zeros(Y.size, X.size)
    for w in range(X.size):
        x, g = src.rep[w], src.transporter[w]
        v = images.get(x)
        if v is None:
            continue
        col = Y.act[g]
        for y, a in enumerate(v):
            if a:
                A[col[y]][w] = ring(A[col[y]][w] + a)
    return A


# ---------------------------------------------------------------- G-splitting

@dataclass
class SplitCertificate:
    """Equivariant contraction of the augmented complex over ZZ.

    ``sections[i]`` is a matrix ``C_{i-1} -> C_i`` (``C_{-1} = Z``); restricted
    to the cycles ``Z_{i-1}`` it splits ``0 -> Z_i -> C_i -> Z_{i-1} -> 0``.
    """

    complex: SpecialComplex
    sections: dict

    def verify(self) -> bool:
        C = self.complex
        ring = ZZ
        n = C.top
        aug = [list(C.augmentation)]
        dims = {-1: 1, **{i: C.bases[i].size for i in range(n + 1)}}

        def bd(i):  # C_i -> C_{i-1}
            if i == 0:
                return aug
            return C.boundary(i)

        def h(j):  # C_j -> C_{j+1}
            if j + 1 in self.sections:
                return self.sections[j + 1]
            return zeros(dims.get(j + 1, 0), dims[j])

        for j in range(-1, n + 1):
            lhs = zeros(dims[j], dims[j])
            if j + 1 <= n:
                lhs = _add(lhs, matmul(bd(j + 1), h(j), ring, dims[j]), ring)
            if j >= 0:
                lhs = _add(lhs, matmul(h(j - 1), bd(j), ring, dims[j]), ring)
            if lhs != identity(dims[j]):
                return False
        G = C.group
        trivial = ConcreteGSet.trivial(G, 1)
        for i, S in self.sections.items():
            src = trivial if i == 0 else C.bases[i - 1]
            try:
                check_equivariant(src, C.bases[i], S, i, "section")
            except NotEquivariant:
                return False
        return True

    def to_dict(self):
        return {"ok": True, "sections": {str(i): [[_enc(x) for x in r] for r in S] for i, S in sorted(self.sections.items())}}


@dataclass
class SplitFailure:
    degree: int
    reason: str

    def to_dict(self):
        return {"ok": False, "degree": self.degree, "reason": self.reason}


def g_split_check(C: SpecialComplex):
    """Search for integral equivariant sections of every ``0 -> Z_i -> C_i -> Z_{i-1} -> 0``.

    Returns a verified SplitCertificate, or a SplitFailure naming the first
    degree where no equivariant section exists.
    """
    if C.augmentation is None:
        raise ChainError("g_split_check needs an augmented complex")
    if C.ring.kind != "ZZ":
        C = C.with_ring(ZZ)
    G = C.group
    n = C.top
    trivial = ConcreteGSet.trivial(G, 1)
    aug = [list(C.augmentation)]

    def bd(i):
        return aug if i == 0 else C.boundary(i)

    def space(j):
        return trivial if j == -1 else C.bases[j]

    sections = {}
    prev_h = None  # h_{j-1}: C_{j-1} -> C_j
    for j in range(-1, n + 1):
        Xj = space(j)
        size_j = Xj.size
        # pi = id - h_{j-1} d_j, which maps C_j into the cycles Z_j
        pi = identity(size_j)
        if j >= 0 and prev_h is not None:
            pi = _sub(pi, matmul(prev_h, bd(j), ZZ, size_j), ZZ)
        if j == n:
            if not is_zero(pi):
                return SplitFailure(n + 1, f"cycles in top degree {n} are nonzero")
            break
        Y = C.bases[j + 1]
        src = _OrbitData(Xj)
        params = _param_images(src, Y, admissible=False)
        B = bd(j + 1)
        images = {}
        for x in src.reps:
            mine = [sup for (xx, sup) in params if xx == x]
            cols = []
            for sup in mine:
                col = [0] * size_j
                for y in sup:
                    for r in range(size_j):
                        if B[r][y]:
                            col[r] += B[r][y]
                cols.append(col)
            A = transpose(cols, size_j)
            target = [pi[r][x] for r in range(size_j)]
            sol = solve_linear(A, target, ZZ, len(cols))
            if sol is None:
                return SplitFailure(j + 1, f"no integral equivariant section at orbit of basis element {x}")
            v = [0] * Y.size
            for a, sup in zip(sol, mine):
                for y in sup:
                    v[y] += a
            images[x] = v
        h = equivariant_matrix(src, Y, images, ZZ)
        sections[j + 1] = h
        prev_h = h
    cert = SplitCertificate(C, sections)
    if not cert.verify():
        raise ConstructionFailed("split certificate failed re-verification")
    return cert


# ---------------------------------------------------------------- chain maps

class AdmissibleChainMap:
    def __init__(self, source: SpecialComplex, target: SpecialComplex, maps, *, validate=True):
        ring = source.ring
        self.source = source
        self.target = target
        self.ring = ring
        top = max(source.top, target.top)
        maps = list(maps) + [None] * (top + 1 - len(maps))
        self.maps = []
        for i in range(top + 1):
            rows, cols = target.basis(i).size, source.basis(i).size
            M = maps[i] if maps[i] is not None else zeros(rows, cols)
            if len(M) != rows or any(len(r) != cols for r in M):
                raise ChainError(f"chain map has the wrong shape in degree {i}")
            self.maps.append(_reduce(M, ring))
        if validate:
            self.validate()

    @property
    def top(self):
        return len(self.maps) - 1

    def __getitem__(self, i):
        if 0 <= i <= self.top:
            return self.maps[i]
        return zeros(self.target.basis(i).size, self.source.basis(i).size)

    def validate(self):
        C, D, ring = self.source, self.target, self.ring
        for i in range(self.top + 1):
            check_equivariant(C.basis(i), D.basis(i), self.maps[i], i, "chain map")
            check_admissible(C.basis(i), D.basis(i), self.maps[i], i, "chain map")
        for i in range(1, self.top + 1):
            lhs = matmul(D.boundary(i), self.maps[i], ring, C.basis(i).size)
            rhs = matmul(self.maps[i - 1], C.boundary(i), ring, C.basis(i).size)
            if _sub(lhs, rhs, ring) != zeros(len(lhs), C.basis(i).size):
                raise NotAChainMap(i)
        return self


def _restrict_map(f: AdmissibleChainMap, h, i):
    fx = fixed_points(f.source.basis(i), h)
    fy = fixed_points(f.target.basis(i), h)
    M = f[i]
    return [[M[y][x] for x in fx] for y in fy]


def _quasi_iso_witness(f: AdmissibleChainMap, field: Ring):
    lat = f.source.lattice
    for c in range(lat.num_classes):
        h = lat.rep(c)
        PC, PD = fixed_subcomplex(f.source, h), fixed_subcomplex(f.target, h)

        def dim(P, i):
            return P.dims[i] if 0 <= i <= P.top else 0

        def brank(P, i):
            if i < 1 or i > P.top:
                return 0
            return rank(P.d[i], field, P.dims[i])

        for i in range(f.top + 1):
            nC, nD = dim(PC, i), dim(PD, i)
            if 1 <= i <= PC.top:
                cycles = nullspace(PC.d[i], field, nC)
            else:
                cycles = [[field(int(a == b)) for a in range(nC)] for b in range(nC)]
            bD = brank(PD, i + 1)
            hC = len(cycles) - brank(PC, i + 1)
            hD = nD - brank(PD, i) - bD
            if hC != hD:
                return c, i
            if hD == 0:
                continue
            F = _restrict_map(f, h, i)
            cols = [[sum(F[r][k] * z[k] for k in range(nC)) for r in range(nD)] for z in cycles]
            if 1 <= i + 1 <= PD.top:
                cols += transpose(PD.d[i + 1], nD)
            stacked = transpose(cols, nD)
            if rank(stacked, field, len(cols)) - bD != hD:
                return c, i
    return None


@dataclass
class HomotopyCertificate:
    """``g`` inverts ``f`` up to the admissible homotopies ``s`` (on the source) and ``t`` (on the target)."""

    f: AdmissibleChainMap
    g: list
    s: list
    t: list
    field: Ring

    def residuals(self):
        """The matrices g f - id - (ds + sd) and f g - id - (dt + td), per degree."""
        f, F = self.f, self.field
        C, D = f.source, f.target
        out = []
        for i in range(f.top + 1):
            nC, nD = C.basis(i).size, D.basis(i).size
            s_i = self.s[i] if i < len(self.s) else zeros(C.basis(i + 1).size, nC)
            s_prev = self.s[i - 1] if i >= 1 else zeros(nC, 0)
            t_i = self.t[i] if i < len(self.t) else zeros(D.basis(i + 1).size, nD)
            t_prev = self.t[i - 1] if i >= 1 else zeros(nD, 0)
            gf = matmul(self.g[i], f[i], F, nC)
            r1 = _sub(_sub(gf, identity(nC), F),
                      _add(matmul(C.boundary(i + 1), s_i, F, nC),
                           matmul(s_prev, C.boundary(i), F, nC) if i >= 1 else zeros(nC, nC), F), F)
            fg = matmul(f[i], self.g[i], F, nD)
            r2 = _sub(_sub(fg, identity(nD), F),
                      _add(matmul(D.boundary(i + 1), t_i, F, nD),
                           matmul(t_prev, D.boundary(i), F, nD) if i >= 1 else zeros(nD, nD), F), F)
            out.append((r1, r2))
        return out

    def verify(self) -> bool:
        f = self.f
        C, D, F = f.source, f.target, self.field
        try:
            for i in range(f.top + 1):
                check_equivariant(D.basis(i), C.basis(i), self.g[i], i, "inverse")
                check_admissible(D.basis(i), C.basis(i), self.g[i], i, "inverse")
                check_equivariant(C.basis(i), C.basis(i + 1), self.s[i], i, "homotopy s")
                check_admissible(C.basis(i), C.basis(i + 1), self.s[i], i, "homotopy s")
                check_equivariant(D.basis(i), D.basis(i + 1), self.t[i], i, "homotopy t")
                check_admissible(D.basis(i), D.basis(i + 1), self.t[i], i, "homotopy t")
            for i in range(1, f.top + 1):
                n = D.basis(i).size
                if _sub(matmul(C.boundary(i), self.g[i], F, n), matmul(self.g[i - 1], D.boundary(i), F, n), F) \
                        != zeros(C.basis(i - 1).size, n):
                    return False
        except ChainError:
            return False
        return all(is_zero(r1) and is_zero(r2) for r1, r2 in self.residuals())

    def to_dict(self):
        def enc(ms):
            return [[[_enc(x) for x in r] for r in M] for M in ms]

        return {"ok": True, "field": str(self.field), "g": enc(self.g), "s": enc(self.s), "t": enc(self.t)}


def _try_inverse(f: AdmissibleChainMap, F: Ring):
    g = []
    for i in range(f.top + 1):
        M = f[i]
        n = len(M)
        if n != (len(M[0]) if M else f.source.basis(i).size):
            return None
        cols = []
        for k in range(n):
            e = [F(int(r == k)) for r in range(n)]
            x = solve_linear(M, e, F, n)
            if x is None:
                return None
            cols.append(x)
        g.append(transpose(cols, n))
    return g


def kw_equivalence(f: AdmissibleChainMap, field) -> HomotopyCertificate:
    """Certify that an admissible map which is a quasi-isomorphism on every
    fixed subcomplex is an admissible chain homotopy equivalence.

    Raises NotQuasiIso with the first failing (class, degree) otherwise.
    """
    F = Ring.parse(field)
    if not F.is_field:
        raise ChainError("kw_equivalence works over QQ or GF(p)")
    C = f.source.with_ring(F)
    D = f.target.with_ring(F)
    f = AdmissibleChainMap(C, D, f.maps, validate=False)
    witness = _quasi_iso_witness(f, F)
    if witness is not None:
        c, i = witness
        raise NotQuasiIso(c, i, f.source.lattice.class_names[c])
    top = f.top

    def zero_maps(src_of, tgt_of):
        return [zeros(tgt_of(i).size, src_of(i).size) for i in range(top + 1)]

    g = _try_inverse(f, F)
    if g is not None:
        cert = HomotopyCertificate(f, g,
                                   zero_maps(C.basis, lambda i: C.basis(i + 1)),
                                   zero_maps(D.basis, lambda i: D.basis(i + 1)), F)
        if cert.verify():
            return cert
    cert = _solve_homotopy(f, F)
    if not cert.verify():
        raise ConstructionFailed("homotopy certificate failed re-verification")
    return cert


def _solve_homotopy(f: AdmissibleChainMap, F: Ring) -> HomotopyCertificate:
    """Solve for g, s, t at once; every equation is linear in the unknowns."""
    C, D = f.source, f.target
    top = f.top
    unknowns = {}
    for i in range(top + 1):
        unknowns["g", i] = (D.basis(i), C.basis(i))
        unknowns["s", i] = (C.basis(i), C.basis(i + 1))
        unknowns["t", i] = (D.basis(i), D.basis(i + 1))
    odata = {}

    def orbit_data(X):
        key = id(X)
        if key not in odata:
            odata[key] = _OrbitData(X)
        return odata[key]

    columns = []  # (unknown key, x, y)
    offsets = {}
    for key, (X, Y) in unknowns.items():
        offsets[key] = len(columns)
        for x, sup in _param_images(orbit_data(X), Y, admissible=True):
            columns.append((key, x, sup[0]))
    by_unknown = {}
    for idx, (key, x, y) in enumerate(columns):
        by_unknown.setdefault(key, {}).setdefault(x, []).append((idx, y))

    # equations: (source gset, target gset, terms, rhs) with term = (sign, L, key, R)
    eqs = []
    for i in range(top + 1):
        Ci, Di = C.basis(i), D.basis(i)
        if i >= 1:
            eqs.append((Di, C.basis(i - 1), [(1, C.boundary(i), ("g", i), None),
                                            (-1, None, ("g", i - 1), D.boundary(i))], None))
        terms = [(1, None, ("g", i), f[i]), (-1, C.boundary(i + 1), ("s", i), None)]
        if i >= 1:
            terms.append((-1, None, ("s", i - 1), C.boundary(i)))
        eqs.append((Ci, Ci, terms, "id"))
        terms = [(1, f[i], ("g", i), None), (-1, D.boundary(i + 1), ("t", i), None)]
        if i >= 1:
            terms.append((-1, None, ("t", i - 1), D.boundary(i)))
        eqs.append((Di, Di, terms, "id"))

    rows = []
    rhs = []
    for src, tgt, terms, kind in eqs:
        sdata = orbit_data(src)
        for z in sdata.reps:
            block = [dict() for _ in range(tgt.size)]
            for sign, L, key, R in terms:
                X, Y = unknowns[key]
                xdata = orbit_data(X)
                inputs = [(z, 1)] if R is None else [(w, R[w][z]) for w in range(X.size) if R[w][z]]
                for w, coef in inputs:
                    x, g = xdata.rep[w], xdata.transporter[w]
                    for idx, y in by_unknown.get(key, {}).get(x, []):
                        yy = Y.act[g][y]
                        if L is None:
                            block[yy][idx] = block[yy].get(idx, 0) + sign * coef
                        else:
                            for r in range(tgt.size):
                                if L[r][yy]:
                                    block[r][idx] = block[r].get(idx, 0) + sign * coef * L[r][yy]
            for r in range(tgt.size):
                target = 1 if (kind == "id" and r == z) else 0
                if not block[r] and not target:
                    continue
                row = [0] * len(columns)
                for idx, v in block[r].items():
                    row[idx] = v
                rows.append(row)
                rhs.append(target)
    sol = solve_linear(rows, rhs, F, len(columns)) if rows else [F(0)] * len(columns)
    if sol is None:
        raise ConstructionFailed("no admissible homotopy inverse found")
    maps = {}
    for key, (X, Y) in unknowns.items():
        xdata = orbit_data(X)
        images = {}
        for x, entries in by_unknown.get(key, {}).items():
            v = [0] * Y.size
            for idx, y in entries:
                v[y] = sol[idx]
            images[x] = v
        maps[key] = equivariant_matrix(xdata, Y, images, F)
    g = [maps["g", i] for i in range(top + 1)]
    s = [maps["s", i] for i in range(top + 1)]
    t = [maps["t", i] for i in range(top + 1)]
    return HomotopyCertificate(f, g, s, t, F)


# ---------------------------------------------------------------- constructions

def direct_sum(C: SpecialComplex, E: SpecialComplex) -> SpecialComplex:
    top = max(C.top, E.top)
    bases, bds = [], []
    for i in range(top + 1):
        bases.append(C.basis(i).disjoint_union(E.basis(i)))
    for i in range(1, top + 1):
        a, b = C.boundary(i), E.boundary(i)
        ra, ca = C.basis(i - 1).size, C.basis(i).size
        rb, cb = E.basis(i - 1).size, E.basis(i).size
        M = zeros(ra + rb, ca + cb)
        for r in range(ra):
            M[r][:ca] = a[r]
        for r in range(rb):
            M[ra + r][ca:] = b[r]
        bds.append(M)
    aug = None
    if C.augmentation is not None and E.augmentation is not None:
        aug = list(C.augmentation) + list(E.augmentation)
    return SpecialComplex(bases, bds, C.ring, aug)


def elementary_complex(G, members, degree, ring=ZZ) -> SpecialComplex:
    """``0 -> R[G/K] --id--> R[G/K] -> 0`` in degrees ``degree+1`` and ``degree``."""
    X = ConcreteGSet.coset_space(G, members)
    empty = ConcreteGSet.trivial(G, 0)
    bases = [empty] * degree + [X, X]
    bds = [zeros(bases[i - 1].size, bases[i].size) for i in range(1, degree + 2)]
    bds[degree] = identity(X.size)
    return SpecialComplex(bases, bds, ring)


def identity_map(C: SpecialComplex) -> AdmissibleChainMap:
    return AdmissibleChainMap(C, C, [identity(X.size) for X in C.bases])


def zero_map(C: SpecialComplex, D: SpecialComplex) -> AdmissibleChainMap:
    return AdmissibleChainMap(C, D, [])


def projection(S: SpecialComplex, C: SpecialComplex) -> AdmissibleChainMap:
    """``C (+) E -> C`` for a direct sum built as ``direct_sum(C, E)``."""
    maps = []
    for i in range(S.top + 1):
        n, m = C.basis(i).size, S.basis(i).size
        maps.append([[int(r == k) for k in range(m)] for r in range(n)])
    return AdmissibleChainMap(S, C, maps)


def inclusion(C: SpecialComplex, S: SpecialComplex) -> AdmissibleChainMap:
    """``C -> C (+) E`` for a direct sum built as ``direct_sum(C, E)``."""
    maps = []
    for i in range(S.top + 1):
        n, m = C.basis(i).size, S.basis(i).size
        maps.append([[int(r == k) for k in range(n)] for r in range(m)])
    return AdmissibleChainMap(C, S, maps)


# ---------------------------------------------------------------- JSON

def _entry(x, ring):
    return ring(Fraction(x) if isinstance(x, str) else x)


def gset_from_dict(G: FiniteGroup, data) -> ConcreteGSet:
    """``{"size": n, "action": rows}`` (one row per generator or per element)
    or ``{"orbits": ["1", "C2", ...]}`` naming stabilizer classes."""
    if "orbits" in data:
        from .group_core import gset_from_classes

        lat = G.lattice
        return gset_from_classes(lat, [lat.class_by_name(str(c)) for c in data["orbits"]])
    n = int(data["size"])
    rows = [list(r) for r in data.get("action", [])]
    if n == 0:
        return ConcreteGSet.trivial(G, 0)
    if len(rows) == G.order and len(rows) != len(G.generators):
        return ConcreteGSet(G, rows)
    if not rows and not G.generators:
        return ConcreteGSet.trivial(G, n)
    X = ConcreteGSet.from_generator_images(G, n, rows)
    if X.size != n:
        raise ChainError("basis size does not match its action rows")
    return X


def complex_from_dict(G: FiniteGroup, data, ring=None) -> SpecialComplex:
    ring = Ring.parse(ring if ring is not None else data.get("ring", "ZZ"))
    bases = [gset_from_dict(G, d) for d in data["degrees"]]
    bds = [[[_entry(x, ring) for x in r] for r in B] for B in data.get("boundaries", [])]
    # empty matrices lose their width in JSON
    bds = [B if B else zeros(bases[i].size, bases[i + 1].size) for i, B in enumerate(bds)]
    aug = data.get("augmentation")
    if aug is not None:
        aug = [_entry(x, ring) for x in aug]
    return SpecialComplex(bases, bds, ring, aug)


def chain_map_from_dict(G: FiniteGroup, data, ring=None) -> AdmissibleChainMap:
    """``{"source": complex, "target": complex, "maps": [matrix per degree]}``."""
    C = complex_from_dict(G, data["source"], ring)
    D = complex_from_dict(G, data["target"], C.ring)
    maps = []
    for i, M in enumerate(data.get("maps", [])):
        if not M:
            M = zeros(D.basis(i).size, C.basis(i).size)
        maps.append([[_entry(x, C.ring) for x in r] for r in M])
    return AdmissibleChainMap(C, D, maps)
