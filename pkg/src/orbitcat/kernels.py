"""Backend selection for the Cayley-table kernels.

The compiled extension is used when it imports; set ``ORBITCAT_PURE=1`` to
force the pure-Python fallback.  Tables handed to the kernels are
``array('i')`` buffers so both backends accept the same objects.
"""

import os
from array import array

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("ORBITCAT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels


def int_table(values):
    return array("i", values)


def use(backend):
    """Switch backend at runtime ("python" or "cython"); used by the benchmark."""
    global _impl, BACKEND
    if backend == "python":
        _impl, BACKEND = _pykernels, "python"
    elif backend == "cython":
        from . import _ckernels

        _impl, BACKEND = _ckernels, "cython"
    else:
        raise ValueError(f"unknown backend {backend!r}")


def closure(mul, n, gens):
    return _impl.closure(mul, n, gens)


def conjugate(mul, inv, n, elems, g):
    return _impl.conjugate(mul, inv, n, elems, g)


def count_conjugators(mul, inv, n, small, big_flags):
    return _impl.count_conjugators(mul, inv, n, small, big_flags)


def fixed_points(act, npts, elems):
    return _impl.fixed_points(act, npts, elems)


def orbit_labels(act, npts, gens):
    return _impl.orbit_labels(act, npts, gens)
