"""Kernel dispatch.

The numba implementations are used when numba imports and the environment
variable ``HELLY_DISABLE_NUMBA`` is unset (or ``0``). Both implementations
stay importable as ``numpy_impl`` and ``numba_impl`` for differential tests
and the benchmark.
"""
import importlib
import os

import numpy as np

from . import numpy_impl

_disabled = os.environ.get("HELLY_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

numba_impl = None
if not _disabled:
    try:
        numba_impl = importlib.import_module(__name__ + ".numba_impl")
    except ImportError:  # numba not installed
        numba_impl = None

USE_NUMBA = numba_impl is not None
BACKEND = "numba" if USE_NUMBA else "numpy"
_impl = numba_impl if USE_NUMBA else numpy_impl

cross_distances = _impl.cross_distances
packed_cross_distances = _impl.packed_cross_distances
packed_and_counts = _impl.packed_and_counts
packed_min_distance = _impl.packed_min_distance
event_counts = _impl.event_counts
first_point = _impl.first_point
nonzero_pattern = _impl.nonzero_pattern
disjoint_counts = _impl.disjoint_counts


def pack_bits(rows):
    """Pack 0/1 rows into uint64 words; coordinate 1 is the top bit of word 0."""
    arr = np.asarray(rows, dtype=np.uint8)
    if arr.ndim == 1:
        arr = arr[None, :]
    m, n = arr.shape
    words = max(1, -(-n // 64))
    padded = np.zeros((m, words * 64), dtype=np.uint8)
    padded[:, :n] = arr
    by = np.packbits(padded, axis=1, bitorder="big")
    return by.view(">u8").astype(np.uint64).reshape(m, words)


def as_int_matrix(points, n=None):
    if len(points) == 0:
        return np.zeros((0, n or 0), dtype=np.int64)
    return np.asarray(points, dtype=np.int64)


def point_bits(p):
    """Single binary point (length <= 64) as an integer, coordinate 1 most significant."""
    v = 0
    for x in p:
        v = (v << 1) | x
    return v
