"""Cluster-based sensitivity analysis over arbitrary dissimilarity spaces."""

from .cluster import Dendrogram, Linkage, agnes, cut_at_height, cut_into_clusters, order_leaves
from .core import (
    DataCase,
    Dataset,
    DistanceMatrix,
    DistanceSpec,
    Normalization,
    PayloadType,
    Space,
    SpaceKind,
    load_dataset,
    save_dataset,
    validate_matrix,
)
from .errors import ManifestError, MeasureError, NormalizationMismatch, Violation
from .normalize import min_max_normalize, normalize, rank_normalize
from .sensitivity import SensitivityAnnotation, annotate, color_value, diameter, index
from .views import mds1d, shepard_matrix, shepard_panel, subset_sensitivity

__all__ = [
    "DataCase",
    "Dataset",
    "Dendrogram",
    "DistanceMatrix",
    "DistanceSpec",
    "Linkage",
    "ManifestError",
    "MeasureError",
    "Normalization",
    "NormalizationMismatch",
    "PayloadType",
    "SensitivityAnnotation",
    "Space",
    "SpaceKind",
    "Violation",
    "agnes",
    "annotate",
    "color_value",
    "cut_at_height",
    "cut_into_clusters",
    "diameter",
    "index",
    "load_dataset",
    "mds1d",
    "min_max_normalize",
    "normalize",
    "order_leaves",
    "rank_normalize",
    "save_dataset",
    "shepard_matrix",
    "shepard_panel",
    "subset_sensitivity",
    "validate_matrix",
]
