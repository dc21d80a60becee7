"""Rank and min-max normalization of distance matrices.

Two spaces' distances live on arbitrary scales; both operations map them onto
[0, 1] so cluster diameters become comparable. Ranking keeps only the order of
cells (invariant under any strictly increasing transform), min-max keeps
magnitudes (invariant under positive affine transforms).
"""

from __future__ import annotations

import numpy as np
from scipy.stats import rankdata

from .core import DistanceMatrix, Normalization


def _mirror(n: int, upper: np.ndarray) -> np.ndarray:
    out = np.zeros((n, n), dtype=float)
    iu = np.triu_indices(n, k=1)
    out[iu] = upper
    out[(iu[1], iu[0])] = upper
    out.flags.writeable = False
    return out


def min_max_normalize(D: DistanceMatrix) -> DistanceMatrix:
    """Map off-diagonal cells v to (v - min) / (max - min) over the upper triangle.

    When all off-diagonal values are equal the matrix degenerates to all zeros
    (mutually indistinguishable cases carry no variation).
    """
    n = D.n
    tri = D.values[np.triu_indices(n, k=1)]
    lo, hi = tri.min(), tri.max()
    scaled = np.zeros_like(tri) if hi == lo else (tri - lo) / (hi - lo)
    return DistanceMatrix(D.space_name, _mirror(n, scaled), Normalization.MINMAX)


def rank_normalize(D: DistanceMatrix) -> DistanceMatrix:
    """Replace off-diagonal cells by their fractional rank, rescaled onto [0, 1].

    The P = n(n-1)/2 upper-triangle cells are ranked ascending with ties
    receiving the average of their covered ranks, then rank r maps to
    (r - 1) / (P - 1). Symmetry makes ranking the upper triangle equivalent
    to ranking all off-diagonal cells.
    """
    n = D.n
    tri = D.values[np.triu_indices(n, k=1)]
    p = tri.size
    if p == 1:
        scaled = np.zeros(1)
    else:
        ranks = rankdata(tri, method="average")
        scaled = (ranks - 1.0) / (p - 1.0)
    return DistanceMatrix(D.space_name, _mirror(n, scaled), Normalization.RANK)


def normalize(D: DistanceMatrix, mode: Normalization) -> DistanceMatrix:
    if mode is Normalization.MINMAX:
        return min_max_normalize(D)
    if mode is Normalization.RANK:
        return rank_normalize(D)
    raise ValueError(f"cannot normalize to mode {mode!r}")
