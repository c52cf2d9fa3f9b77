"""The Burnside ring B(G), super class functions C(G), Obs(G) and the maps
between them: marks (rho), eta, theta and its inverse, gamma and psi.

All vectors are indexed by conjugacy classes of subgroups in lattice order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from . import kernels
from .classify import hypoelementary_classes
from .group_core import ConcreteGSet, SubgroupLattice, orbit_decomposition, product_gset


def _lat(G_or_lat) -> SubgroupLattice:
    return G_or_lat if isinstance(G_or_lat, SubgroupLattice) else G_or_lat.lattice


def _cached(lat, key, build):
    store = lat.__dict__.setdefault("_burnside_cache", {})
    if key not in store:
        store[key] = build()
    return store[key]


@dataclass(frozen=True)
class BurnsideElement:
    """Integer combination of the transitive G-sets ``[G/K_c]``."""

    lattice: SubgroupLattice
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.num_classes:
            raise ValueError("coefficient vector has the wrong length")

    @classmethod
    def basis(cls, lat, c):
        return cls(lat, tuple(int(i == c) for i in range(lat.num_classes)))

    @classmethod
    def zero(cls, lat):
        return cls(lat, (0,) * lat.num_classes)

    @classmethod
    def one(cls, lat):
        return cls.basis(lat, lat.num_classes - 1)

    def __add__(self, other):
        return BurnsideElement(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return BurnsideElement(self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BurnsideElement(self.lattice, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(self.lattice, tuple(other * a for a in self.coeffs))
        return burnside_mul(self, other)

    __rmul__ = __mul__

    def marks(self):
        return rho(self)

    def __str__(self):
        return format_burnside(self)


@dataclass(frozen=True)
class SuperClassFunction:
    """Integer-valued function on conjugacy classes of subgroups."""

    lattice: SubgroupLattice
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.lattice.num_classes:
            raise ValueError("value vector has the wrong length")

    @classmethod
    def constant(cls, lat, v):
        return cls(lat, (v,) * lat.num_classes)

    def __add__(self, other):
        if isinstance(other, int):
            return SuperClassFunction(self.lattice, tuple(a + other for a in self.values))
        return SuperClassFunction(self.lattice, tuple(a + b for a, b in zip(self.values, other.values)))

    __radd__ = __add__

    def __sub__(self, other):
        return SuperClassFunction(self.lattice, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return SuperClassFunction(self.lattice, tuple(-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperClassFunction(self.lattice, tuple(other * a for a in self.values))
        return SuperClassFunction(self.lattice, tuple(a * b for a, b in zip(self.values, other.values)))

    __rmul__ = __mul__

    def __getitem__(self, c):
        return self.values[c]


@dataclass(frozen=True)
class ObsElement:
    """Element of the direct sum of Z/|W_G(K)| over subgroup classes."""

    moduli: tuple
    residues: tuple

    def __post_init__(self):
        object.__setattr__(self, "residues",
                           tuple(r % m for r, m in zip(self.residues, self.moduli)))

    def is_zero(self):
        return not any(self.residues)

    def __add__(self, other):
        return ObsElement(self.moduli, tuple(a + b for a, b in zip(self.residues, other.residues)))


@dataclass(frozen=True)
class TableOfMarks:
    """``rows[c][d] = |(G/K_c)^{L_d}|`` for class representatives."""

    lattice: SubgroupLattice
    rows: tuple

    def __getitem__(self, cd):
        c, d = cd
        return self.rows[c][d]

    def to_dict(self):
        lat = self.lattice
        return {"classes": list(lat.class_names), "marks": [list(r) for r in self.rows]}


def table_of_marks(G_or_lat) -> TableOfMarks:
    lat = _lat(G_or_lat)

    def build():
        G = lat.group
        n = lat.num_classes
        rows = []
        for c in range(n):
            k = lat.rep(c)
            flags = bytes(int(g in k) for g in range(G.order))
            row = []
            for d in range(n):
                l = lat.rep(d)
                if l.order > k.order or k.order % l.order:
                    row.append(0)
                    continue
                cnt = kernels.count_conjugators(G.table, G.inv_table, G.order, list(l.members), flags)
                row.append(cnt // k.order)
            rows.append(tuple(row))
        return TableOfMarks(lat, tuple(rows))

    return _cached(lat, "marks", build)


def rho(x: BurnsideElement) -> SuperClassFunction:
    """Mark homomorphism: fixed-point counts of a virtual G-set."""
    lat = x.lattice
    M = table_of_marks(lat).rows
    n = lat.num_classes
    return SuperClassFunction(lat, tuple(sum(x.coeffs[c] * M[c][d] for c in range(n)) for d in range(n)))


def rho_solve(v: SuperClassFunction):
    """The unique x with rho(x) = v, or None when v is not a marks vector."""
    lat = v.lattice
    M = table_of_marks(lat).rows
    n = lat.num_classes
    x = [0] * n
    for d in range(n - 1, -1, -1):
        rest = v.values[d] - sum(x[c] * M[c][d] for c in range(d + 1, n))
        q, r = divmod(rest, M[d][d])
        if r:
            return None
        x[d] = q
    return BurnsideElement(lat, tuple(x))


def theta(f: SuperClassFunction) -> SuperClassFunction:
    """theta(f)(K) = sum over subgroups L >= K of mu(K, L) f(L)."""
    lat = f.lattice
    A = lat.mobius_classes
    n = lat.num_classes
    return SuperClassFunction(lat, tuple(sum(A[c][d] * f.values[d] for d in range(n)) for c in range(n)))


def theta_inv(f: SuperClassFunction) -> SuperClassFunction:
    """theta^-1(f)(K) = sum over subgroups L >= K of f(L)."""
    lat = f.lattice
    A = lat.up_counts
    n = lat.num_classes
    return SuperClassFunction(lat, tuple(sum(A[c][d] * f.values[d] for d in range(n)) for c in range(n)))


def eta(x: BurnsideElement) -> SuperClassFunction:
    lat = x.lattice
    return SuperClassFunction(lat, tuple(w * a for w, a in zip(lat.weyl_order, x.coeffs)))


def obs_moduli(G_or_lat):
    return tuple(_lat(G_or_lat).weyl_order)


def gamma(f: SuperClassFunction) -> ObsElement:
    return ObsElement(obs_moduli(f.lattice), f.values)


def psi(f: SuperClassFunction) -> ObsElement:
    return gamma(theta(f))


def _product_constants(lat):
    def build():
        G = lat.group
        n = lat.num_classes
        sets = [ConcreteGSet.coset_space(G, lat.rep(c).members) for c in range(n)]
        table = {}
        for a in range(n):
            for b in range(a, n):
                prod = orbit_decomposition(product_gset(sets[a], sets[b])).coeffs
                table[a, b] = table[b, a] = prod
        return table

    return _cached(lat, "products", build)


def burnside_mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product in B(G), extended bilinearly from products of transitive G-sets."""
    lat = x.lattice
    consts = _product_constants(lat)
    n = lat.num_classes
    out = [0] * n
    for a, xa in enumerate(x.coeffs):
        if not xa:
            continue
        for b, yb in enumerate(y.coeffs):
            if not yb:
                continue
            for c, k in enumerate(consts[a, b]):
                if k:
                    out[c] += xa * yb * k
    return BurnsideElement(lat, tuple(out))


def conlon_invariant(x: BurnsideElement, p):
    """Marks of ``x`` on the p-hypoelementary classes, as ``(class, mark)`` pairs."""
    hypo = sorted(hypoelementary_classes(x.lattice, p))
    marks = rho(x).values
    return tuple((c, marks[c]) for c in hypo)


def conlon_equal(x: BurnsideElement, y: BurnsideElement, p) -> bool:
    """True iff the linearizations of ``x`` and ``y`` agree over a p-local ring.

    Decided by comparing marks on every p-hypoelementary class.
    """
    return conlon_invariant(x, p) == conlon_invariant(y, p)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*\[\s*G\s*/\s*([^\]\s]+)\s*\]")


def parse_burnside(lat: SubgroupLattice, text: str) -> BurnsideElement:
    """Parse expressions such as ``"[G/1] + 2[G/G]"`` or ``"2[G/C2] - [G/C3]"``."""
    coeffs = [0] * lat.num_classes
    pos = 0
    text = text.strip()
    if text in ("", "0"):
        return BurnsideElement(lat, tuple(coeffs))
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (not first and not m.group(1)):
            raise ValueError(f"cannot parse Burnside expression at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        coeffs[lat.class_by_name(m.group(3))] += sign * k
        pos = m.end()
        first = False
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return BurnsideElement(lat, tuple(coeffs))


def format_burnside(x: BurnsideElement) -> str:
    names = x.lattice.class_names
    parts = []
    for c, a in enumerate(x.coeffs):
        if not a:
            continue
        mag = "" if abs(a) == 1 else str(abs(a))
        sign = "-" if a < 0 else "+"
        parts.append((sign, f"{mag}[G/{names[c]}]"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def vector_gcd(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
