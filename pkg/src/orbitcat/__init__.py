"""Finite-group machinery for Burnside rings, resolving functions, orbit-category
modules and special G-complexes, all in exact arithmetic."""

from .group_core import (
    ConcreteGSet,
    FiniteGroup,
    Subgroup,
    SubgroupLattice,
    fixed_points,
    group_from_generators,
    group_preset,
    has_normal_sylow,
    mobius,
    orbit_decomposition,
    product_gset,
    subgroup_lattice,
)
from .kernels import BACKEND

__version__ = "0.1.0"
