"""Builtin dissimilarity measures for the supported payload types.

Every measure is symmetric, nonnegative and zero on identical payloads.
None of them is required to satisfy the triangle inequality; downstream
code only needs a dissimilarity, not a metric.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    DistanceMatrix,
    Grid2d,
    Normalization,
    PayloadType,
    RingKernel,
    Space,
    TimeSeries,
)
from .errors import MeasureError

# Time grids must agree to this absolute tolerance; series are never resampled.
TIME_GRID_TOLERANCE = 1e-9


def euclidean(a, b) -> float:
    """L2 norm of the element-wise difference of two scalar/vector/grid payloads.

    Grids must share shape and mask; masked cells are excluded on both sides.
    """
    if isinstance(a, Grid2d) or isinstance(b, Grid2d):
        if not (isinstance(a, Grid2d) and isinstance(b, Grid2d)):
            raise MeasureError("ShapeMismatch", "cannot compare a grid with a non-grid")
        if (a.rows, a.cols) != (b.rows, b.cols):
            raise MeasureError(
                "ShapeMismatch",
                f"grid shapes differ: {a.rows}x{a.cols} vs {b.rows}x{b.cols}",
            )
        if (a.mask is None) != (b.mask is None) or (
            a.mask is not None and not np.array_equal(a.mask, b.mask)
        ):
            raise MeasureError("ShapeMismatch", "grid masks differ")
        va, vb = a.values, b.values
        if a.mask is not None:
            keep = ~a.mask
            va, vb = va[keep], vb[keep]
        return float(np.linalg.norm(va - vb))
    if isinstance(a, float) and isinstance(b, float):
        return abs(a - b)
    va, vb = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if va.shape != vb.shape:
        raise MeasureError("ShapeMismatch", f"vector shapes differ: {va.shape} vs {vb.shape}")
    return float(np.linalg.norm(va - vb))


def region_pair_count(a, b) -> int:
    """Number of unordered location pairs co-assigned in exactly one partition.

    Invariant under relabeling of region ids; zero iff the two label vectors
    describe the same partition. The maximum is L*(L-1)/2.
    """
    la, lb = np.asarray(a), np.asarray(b)
    if la.shape != lb.shape:
        raise MeasureError(
            "ShapeMismatch", f"regionalizations cover {la.size} vs {lb.size} locations"
        )

    def same_pairs(counts: np.ndarray) -> int:
        counts = counts.astype(np.int64)
        return int((counts * (counts - 1) // 2).sum())

    _, counts_a = np.unique(la, return_counts=True)
    _, counts_b = np.unique(lb, return_counts=True)
    _, counts_ab = np.unique(np.column_stack([la, lb]), axis=0, return_counts=True)
    return same_pairs(counts_a) + same_pairs(counts_b) - 2 * same_pairs(counts_ab)


def ring_kernel_param(a: RingKernel, b: RingKernel) -> float:
    """Euclidean distance between two ring kernels in (inner, outer) space."""
    if a.units != b.units:
        raise MeasureError("UnitMismatch", f"ring kernel units differ: {a.units!r} vs {b.units!r}")
    return math.hypot(a.inner - b.inner, a.outer - b.outer)


def time_series_euclidean(a: TimeSeries, b: TimeSeries) -> float:
    """L2 norm of value differences on an identical time grid."""
    if len(a.times) != len(b.times):
        raise MeasureError(
            "GridMismatch", f"time grids differ in length: {len(a.times)} vs {len(b.times)}"
        )
    if np.abs(a.times - b.times).max() > TIME_GRID_TOLERANCE:
        raise MeasureError("GridMismatch", "time grids differ; series are not resampled")
    return float(np.linalg.norm(a.values - b.values))


MEASURES = {
    "euclidean": euclidean,
    "regionPairCount": region_pair_count,
    "ringKernelParam": ring_kernel_param,
    "timeSeriesEuclidean": time_series_euclidean,
}

COMPATIBLE_TYPES: dict[str, set[PayloadType]] = {
    "euclidean": {PayloadType.SCALAR, PayloadType.VECTOR, PayloadType.GRID2D},
    "regionPairCount": {PayloadType.REGIONALIZATION},
    "ringKernelParam": {PayloadType.RING_KERNEL},
    "timeSeriesEuclidean": {PayloadType.TIME_SERIES},
}


def build_raw_matrix(space: Space) -> DistanceMatrix:
    """Evaluate the space's builtin measure over every unordered case pair.

    Symmetric by construction (each pair evaluated once) with a zero diagonal.
    Measure errors are re-raised with the offending pair identified.
    """
    measure = MEASURES[space.distance_spec.measure]
    payloads = space.payloads
    n = len(payloads)
    values = np.zeros((n, n), dtype=float)
    for i in range(n):
        for j in range(i + 1, n):
            try:
                d = float(measure(payloads[i], payloads[j]))
            except MeasureError as exc:
                raise MeasureError(exc.code, f"cases ({i},{j}): {exc.message}") from exc
            if not np.isfinite(d):
                raise MeasureError("NonFiniteDistance", f"cases ({i},{j}): distance is {d}")
            values[i, j] = values[j, i] = d
    values.flags.writeable = False
    return DistanceMatrix(space.name, values, Normalization.RAW)
