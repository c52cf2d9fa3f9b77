"""Mod-p and integral resolving functions and the invariants m_p(G), m(G)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .burnside import (
    BurnsideElement,
    SuperClassFunction,
    rho,
    rho_solve,
    theta_inv,
    vector_gcd,
)
from .classify import hypoelementary_classes, in_Gp, in_Gpq, is_p_hypoelementary
from .exact_linalg import hermite_kernel, hnf_rows
from .group_core import FiniteGroup, SubgroupLattice, p_part, prime_factors


class PPowerOrder(ValueError):
    """Raised when a statement needs a group whose order is not a power of p."""


def _lat(G_or_lat) -> SubgroupLattice:
    return G_or_lat if isinstance(G_or_lat, SubgroupLattice) else G_or_lat.lattice


@dataclass
class ResolvingCertificate:
    """Outcome of checking the two defining conditions class by class.

    ``divisibility`` holds ``(class, weyl_order, value)`` records and
    ``vanishing`` holds ``(class, upward_sum)`` records for the constrained
    classes.  ``failure`` names the first violated ``(class, condition)``.
    """

    p: int | None
    phi: SuperClassFunction
    divisibility: list = field(default_factory=list)
    vanishing: list = field(default_factory=list)
    failure: tuple | None = None

    @property
    def ok(self):
        return self.failure is None

    def __bool__(self):
        return self.ok

    def verify(self):
        """Recheck every record against the lattice from scratch."""
        lat = self.phi.lattice
        for c, w, v in self.divisibility:
            if w != lat.weyl_order[c] or v != self.phi.values[c]:
                return False
            if v % w:
                return False
        for c, total in self.vanishing:
            recomputed = sum(lat.up_counts[c][d] * self.phi.values[d] for d in range(lat.num_classes))
            if recomputed != total or total != 0:
                return False
        return self.ok

    def to_dict(self):
        names = self.phi.lattice.class_names
        return {
            "p": self.p,
            "phi": list(self.phi.values),
            "ok": self.ok,
            "divisibility": [{"class": names[c], "weyl_order": w, "value": v} for c, w, v in self.divisibility],
            "vanishing": [{"class": names[c], "sum": s} for c, s in self.vanishing],
            "failure": None if self.failure is None else {"class": names[self.failure[0]], "condition": self.failure[1]},
        }


def _constrained_classes(lat, p):
    if p is not None:
        return sorted(hypoelementary_classes(lat, p))
    # integral case: every prime dividing |G|, plus cyclic classes which are
    # p-hypoelementary for every prime (this covers the trivial group)
    out = set()
    for q in prime_factors(lat.group.order):
        out |= hypoelementary_classes(lat, q)
    G = lat.group
    for c in range(lat.num_classes):
        k = lat.rep(c)
        if any(G.element_order(g) == k.order for g in k.members):
            out.add(c)
    return sorted(out)


def _check(phi, p, classes):
    lat = phi.lattice
    cert = ResolvingCertificate(p=p, phi=phi)
    for c in range(lat.num_classes):
        w = lat.weyl_order[c]
        cert.divisibility.append((c, w, phi.values[c]))
        if phi.values[c] % w and cert.failure is None:
            cert.failure = (c, "divisibility")
    up = lat.up_counts
    for c in classes:
        total = sum(up[c][d] * phi.values[d] for d in range(lat.num_classes))
        cert.vanishing.append((c, total))
        if total and cert.failure is None:
            cert.failure = (c, "vanishing")
    return cert


def is_resolving(phi: SuperClassFunction, p) -> ResolvingCertificate:
    """Check the mod p resolving conditions; the result is truthy iff both hold."""
    return _check(phi, p, _constrained_classes(phi.lattice, p))


def is_integral_resolving(phi: SuperClassFunction) -> ResolvingCertificate:
    return _check(phi, None, _constrained_classes(phi.lattice, None))


def lemma_criterion(phi: SuperClassFunction, p) -> bool:
    """theta^-1(phi) is a marks vector and vanishes on p-hypoelementary classes."""
    f = theta_inv(phi)
    if rho_solve(f) is None:
        return False
    return all(f.values[c] == 0 for c in hypoelementary_classes(phi.lattice, p))


@dataclass
class ResolvingLattice:
    lattice: SubgroupLattice
    p: int | None
    basis: list

    @property
    def rank(self):
        return len(self.basis)

    def gcd_at_top(self):
        top = self.lattice.num_classes - 1
        return vector_gcd(v.values[top] for v in self.basis)

    def combination(self, coeffs):
        n = self.lattice.num_classes
        vals = [0] * n
        for a, v in zip(coeffs, self.basis):
            for i in range(n):
                vals[i] += a * v.values[i]
        return SuperClassFunction(self.lattice, tuple(vals))

    def to_dict(self):
        return {
            "p": self.p,
            "classes": list(self.lattice.class_names),
            "basis": [list(v.values) for v in self.basis],
            "rank": self.rank,
        }


def _lattice(lat, p):
    n = lat.num_classes
    w = lat.weyl_order
    up = lat.up_counts
    rows = [[up[c][d] * w[d] for d in range(n)] for c in _constrained_classes(lat, p)]
    ys = hermite_kernel(rows, n)
    phis = hnf_rows([[w[d] * y[d] for d in range(n)] for y in ys], n)
    return ResolvingLattice(lat, p, [SuperClassFunction(lat, tuple(v)) for v in phis])


def resolving_lattice(G_or_lat, p) -> ResolvingLattice:
    """All mod p resolving functions: phi = weyl * y with y in an integer kernel."""
    return _lattice(_lat(G_or_lat), p)


def integral_resolving_lattice(G_or_lat) -> ResolvingLattice:
    return _lattice(_lat(G_or_lat), None)


def m_p(G_or_lat, p) -> int:
    """gcd of phi(G) over all mod p resolving functions (0 if they all vanish at G)."""
    return resolving_lattice(G_or_lat, p).gcd_at_top()


def m_p_closed_form(G_or_lat, p) -> int:
    lat = _lat(G_or_lat)
    if is_p_hypoelementary(lat, lat.whole, p):
        return 0
    if not in_Gp(lat, p):
        return 1
    out = 1
    for q in prime_factors(lat.group.order):
        if in_Gpq(lat, p, q):
            out *= q
    return out


def m_integral(G_or_lat) -> int:
    return integral_resolving_lattice(G_or_lat).gcd_at_top()


def realizable_fixed_euler(G_or_lat, p, chi) -> bool:
    """Whether ``chi`` is congruent to 1 modulo m_p(G); m_p = 0 demands chi = 1."""
    lat = _lat(G_or_lat)
    order = lat.group.order
    if p_part(order, p) == order:
        raise PPowerOrder(f"|G| = {order} is a power of {p}")
    m = m_p(lat, p)
    if m == 0:
        return chi == 1
    return (chi - 1) % m == 0


def oliver_burnside_element(phi: SuperClassFunction, p) -> BurnsideElement:
    """The element of B(G) whose marks are 1 + theta^-1(phi)."""
    cert = is_resolving(phi, p)
    if not cert:
        raise ValueError(f"not a mod {p} resolving function: {cert.failure}")
    x = rho_solve(theta_inv(phi) + 1)
    if x is None:
        raise AssertionError("theta^-1 of a resolving function is not a marks vector")
    return x


__all__ = [
    "PPowerOrder",
    "ResolvingCertificate",
    "ResolvingLattice",
    "integral_resolving_lattice",
    "is_integral_resolving",
    "is_resolving",
    "lemma_criterion",
    "m_integral",
    "m_p",
    "m_p_closed_form",
    "oliver_burnside_element",
    "realizable_fixed_euler",
    "resolving_lattice",
    "rho",
]
