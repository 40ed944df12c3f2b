"""Kernel backend selection and the step plan shared by both backends.

The compiled extension is used when importable.  Setting the environment
variable ``LOEWNER_REGIONS_BACKEND=python`` forces the pure-Python kernels.
"""
import math
import os

import numpy as np

from . import _kernels_py

_requested = os.environ.get("LOEWNER_REGIONS_BACKEND", "").strip().lower()

if _requested == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        _impl = _kernels_py
        BACKEND = "python"

radial_rk4 = _impl.radial_rk4
chordal_rk4 = _impl.chordal_rk4

# gaps between breakpoints shorter than this are merged into the next piece
MERGE_GAP = 1e-12


def kernels(name=None):
    """Return the kernel module for ``name`` ('cython', 'python') or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels  # type: ignore[attr-defined]
        return _kernels
    raise ValueError(f"unknown backend {name!r}")


def plan_segments(knots_t, T, step):
    """Split [0, T] at driver knots into pieces of uniform RK4 steps.

    Returns ``(seg_a, seg_b, seg_k, seg_n)``: piece bounds, the index of the
    knot governing each piece (-1 before the first knot) and the number of
    steps of size ``<= step`` taken in it.  The last step of every piece lands
    exactly on its right end.
    """
    if not (T > 0 and step > 0):
        raise ValueError("T and step must be positive")
    kt = np.asarray(knots_t, dtype=np.float64)
    inner = np.unique(kt[(kt > 0.0) & (kt < T)])
    edges = [0.0]
    tol = MERGE_GAP * max(1.0, T)
    for b in inner:
        if b - edges[-1] > tol:
            edges.append(float(b))
    if T - edges[-1] <= tol and len(edges) > 1:
        edges.pop()
    edges.append(float(T))
    edges = np.asarray(edges)
    seg_a = np.ascontiguousarray(edges[:-1])
    seg_b = np.ascontiguousarray(edges[1:])
    if kt.size:
        mid = 0.5 * (seg_a + seg_b)
        seg_k = np.searchsorted(kt, mid, side="right").astype(np.int64) - 1
    else:
        seg_k = np.full(seg_a.shape, -1, dtype=np.int64)
    widths = (seg_b - seg_a) / step
    seg_n = np.array([max(1, math.ceil(w - 1e-9)) for w in widths], dtype=np.int64)
    return seg_a, seg_b, np.ascontiguousarray(seg_k), seg_n
