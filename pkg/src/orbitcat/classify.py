"""Dress classes: p-hypoelementary subgroups and the classes G_p^q, G_p."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .group_core import FiniteGroup, SubgroupLattice, p_part, prime_factors


def _lat(G_or_lat) -> SubgroupLattice:
    return G_or_lat if isinstance(G_or_lat, SubgroupLattice) else G_or_lat.lattice


def p_core(lat: SubgroupLattice, h, p):
    """O_p(h): the intersection of the Sylow p-subgroups of ``h``."""
    sylows = lat.sylow_subgroups(h, p)
    mask = sylows[0].mask
    for s in sylows[1:]:
        mask &= s.mask
    return lat._by_mask[mask]


def is_p_hypoelementary(lat: SubgroupLattice, h, p) -> bool:
    """True iff ``h/O_p(h)`` is cyclic of order prime to p."""
    h = lat.sub(h)
    core = p_core(lat, h, p)
    if core.order != p_part(h.order, p):
        return False
    if core.order == h.order:
        return True
    G = lat.group
    for g in h.members:
        if g in core:
            continue
        if len(kernels.closure(G.table, G.order, list(core.gens) + [g])) == h.order:
            return True
    return False


def hypoelementary_classes(G_or_lat, p) -> frozenset:
    lat = _lat(G_or_lat)
    return frozenset(c for c in range(lat.num_classes)
                     if is_p_hypoelementary(lat, lat.rep(c), p))


def in_Gpq(G_or_lat, p, q) -> bool:
    """Some normal subgroup in G_p^1 has index a power of q (q^0 included)."""
    lat = _lat(G_or_lat)
    order = lat.group.order
    for c in range(lat.num_classes):
        if len(lat.class_members[c]) != 1:
            continue
        k = lat.rep(c)
        index = order // k.order
        if p_part(index, q) == index and is_p_hypoelementary(lat, k, p):
            return True
    return False


def in_Gp(G_or_lat, p) -> bool:
    lat = _lat(G_or_lat)
    if is_p_hypoelementary(lat, lat.whole, p):
        return True
    return any(in_Gpq(lat, p, q) for q in prime_factors(lat.group.order))


@dataclass(frozen=True)
class DressClassification:
    group: FiniteGroup
    p: int
    hypoelementary_classes: frozenset
    gpq_primes: frozenset
    in_gp: bool

    @property
    def in_gp1(self):
        return self.group.lattice.num_classes - 1 in self.hypoelementary_classes

    def to_dict(self):
        lat = self.group.lattice
        return {
            "p": self.p,
            "hypoelementary_classes": [lat.class_names[c] for c in sorted(self.hypoelementary_classes)],
            "in_Gp1": self.in_gp1,
            "Gpq_primes": sorted(self.gpq_primes),
            "in_Gp": self.in_gp,
        }


def classify(G: FiniteGroup, p) -> DressClassification:
    lat = G.lattice
    return DressClassification(
        group=G,
        p=p,
        hypoelementary_classes=hypoelementary_classes(lat, p),
        gpq_primes=frozenset(q for q in prime_factors(G.order) if in_Gpq(lat, p, q)),
        in_gp=in_Gp(lat, p),
    )
