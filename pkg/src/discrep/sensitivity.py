"""Cluster diameters and the per-cluster discrepancy (sensitivity) index.

The index of a cluster is the difference between its diameter in an
alternative distance space and its diameter in the primary space the
dendrogram was built from. Positive means the cluster is wider in the
alternative space, negative means it shrank, zero means matched variation.
With both matrices normalized onto [0, 1] the index always lies in [-1, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cluster import Dendrogram, Linkage
from .core import DistanceMatrix, Normalization
from .errors import NormalizationMismatch

THEORETICAL_BOUNDS = (-1.0, 1.0)

# diverging palette tags, keyed by normalization mode
PALETTES = {
    Normalization.RANK: "rankRedBlue",
    Normalization.MINMAX: "minmaxPurpleGreen",
}


@dataclass(eq=False)
class SensitivityAnnotation:
    primary_space: str
    alternative_space: str
    diam_kind: Linkage
    per_node: dict[int, float]  # every node, leaves included (always 0 there)
    data_bounds: tuple[float, float]  # min/max index over internal nodes

    def to_json(self) -> dict:
        return {
            "primary": self.primary_space,
            "alternative": self.alternative_space,
            "diam": self.diam_kind.value,
            "bounds": {
                "theoretical": list(THEORETICAL_BOUNDS),
                "data": list(self.data_bounds),
            },
            "perNode": {str(k): v for k, v in self.per_node.items()},
        }


def diameter(members, D: DistanceMatrix, diam_kind: Linkage) -> float:
    """Max (complete) or mean (average) pairwise distance within a member set.

    A singleton has an empty pair set and diameter 0 by convention.
    """
    idx = np.asarray(sorted(members))
    if idx.size < 2:
        return 0.0
    sub = D.values[np.ix_(idx, idx)]
    tri = sub[np.triu_indices(idx.size, k=1)]
    if diam_kind is Linkage.COMPLETE:
        return float(tri.max())
    return float(tri.mean())


def index(members, d_primary: DistanceMatrix, d_alt: DistanceMatrix, diam_kind: Linkage) -> float:
    """Diameter in the alternative space minus diameter in the primary space."""
    if d_primary.normalization is not d_alt.normalization:
        raise NormalizationMismatch(
            f"cannot mix {d_primary.normalization.value} and {d_alt.normalization.value} matrices"
        )
    if d_primary.n != d_alt.n:
        raise ValueError("matrices cover different case counts")
    return diameter(members, d_alt, diam_kind) - diameter(members, d_primary, diam_kind)


def annotate(
    dendrogram: Dendrogram,
    d_primary: DistanceMatrix,
    d_alt: DistanceMatrix,
    diam_kind: Linkage,
) -> SensitivityAnnotation:
    """Evaluate the index for every node of a dendrogram built from d_primary."""
    if dendrogram.space_name != d_primary.space_name:
        raise ValueError(
            f"dendrogram was built from {dendrogram.space_name!r}, not {d_primary.space_name!r}"
        )
    if dendrogram.normalization is not d_primary.normalization:
        raise NormalizationMismatch("dendrogram and primary matrix normalization differ")
    per_node: dict[int, float] = {}
    internal: list[float] = []
    for node in dendrogram.nodes:
        value = index(node.members, d_primary, d_alt, diam_kind)
        per_node[node.node_id] = value
        if not node.is_leaf:
            internal.append(value)
    data_bounds = (min(internal), max(internal))
    return SensitivityAnnotation(
        primary_space=d_primary.space_name,
        alternative_space=d_alt.space_name,
        diam_kind=diam_kind,
        per_node=per_node,
        data_bounds=data_bounds,
    )


def color_value(index_value: float, bounds: tuple[float, float] = THEORETICAL_BOUNDS) -> float:
    """Map an index onto [-1, 1] for a diverging color scale, keeping 0 at gray.

    The two sides are scaled independently (positive by the upper bound,
    negative by the magnitude of the lower bound) so that the sign boundary
    survives asymmetric data bounds; values beyond a bound are clamped, and a
    side with no representable range collapses to gray.
    """
    lo, hi = bounds
    if index_value > 0:
        scale = max(hi, 0.0)
        return min(index_value, scale) / scale if scale > 0 else 0.0
    if index_value < 0:
        scale = min(lo, 0.0)
        return -(max(index_value, scale) / scale) if scale < 0 else 0.0
    return 0.0


def resolve_bounds(annotation: SensitivityAnnotation, mode: str) -> tuple[float, float]:
    """Pick the color-scale interval: theoretical [-1, 1] or the data bounds.

    Degenerate data bounds (no spread) fall back to the theoretical interval.
    """
    if mode == "data":
        lo, hi = annotation.data_bounds
        if lo != hi:
            return (lo, hi)
    return THEORETICAL_BOUNDS


def palette_for(normalization: Normalization) -> str:
    return PALETTES[normalization]
