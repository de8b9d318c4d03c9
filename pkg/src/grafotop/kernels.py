"""Kernel backend selection.

The compiled extension is used when it was built and ``GRAFOTOP_PURE`` is not
set; otherwise the pure-Python twins are used. Both produce identical output.
"""

import os

from grafotop import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("GRAFOTOP_PURE"):
    try:
        from grafotop import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels


def clique_grades(n, masks, k_max=-1):
    return _impl.clique_grades(n, masks, k_max)


def integer_rank(rows, ncols):
    if _impl is _pykernels:
        return _pykernels.integer_rank(rows, ncols)
    try:
        return _impl.integer_rank(rows, ncols)
    except OverflowError:
        return _pykernels.integer_rank(rows, ncols)


def subset_euler(d, clique_masks, signs):
    if d > 26 or _impl is _pykernels:
        return _pykernels.subset_euler(d, clique_masks, signs)
    return _impl.subset_euler(d, clique_masks, signs)
