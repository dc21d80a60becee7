"""Analysis session: one loaded dataset plus cached computation on top of it.

The session is the single compute layer behind both the HTTP API and the
batch CLI. The dataset and its matrices are immutable; the only mutable
state is the insert-once result cache and a pointer to the most recently
requested configuration (which the cluster-level endpoints operate on).
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass

from ..cluster import Dendrogram, Linkage, agnes, order_leaves
from ..core import Dataset, DistanceMatrix, Normalization, PayloadType, payload_to_json
from ..normalize import normalize
from ..sensitivity import (
    SensitivityAnnotation,
    annotate,
    color_value,
    palette_for,
    resolve_bounds,
)
from ..views import gallery_order, shepard_matrix, subset_sensitivity


class UnknownSpace(KeyError):
    pass


class UnknownNode(KeyError):
    pass


class UnknownCase(KeyError):
    pass


class PayloadUnavailable(KeyError):
    pass


class NoConfiguration(RuntimeError):
    """A cluster-level query arrived before any dendrogram was requested."""


@dataclass(frozen=True)
class EngineConfig:
    """The computation-relevant part of a session configuration.

    Leaf space and collapsed nodes are pure display concerns and deliberately
    not part of this key, so toggling them never invalidates the cache.
    """

    primary_space: str
    alternative_space: str
    linkage: Linkage
    diam_kind: Linkage
    normalization: Normalization
    color_bounds: str  # "theoretical" | "data"

    def hash(self) -> str:
        doc = {
            "primary": self.primary_space,
            "alternative": self.alternative_space,
            "linkage": self.linkage.value,
            "diam": self.diam_kind.value,
            "normalization": self.normalization.value,
            "colorBounds": self.color_bounds,
        }
        raw = json.dumps(doc, sort_keys=True).encode()
        return hashlib.sha256(raw).hexdigest()[:12]


@dataclass(eq=False)
class ComputedView:
    config: EngineConfig
    config_hash: str
    dendrogram: Dendrogram
    annotation: SensitivityAnnotation
    color_values: dict[int, float]
    segment_lengths: dict[int, float]


class AnalysisSession:
    def __init__(self, dataset: Dataset):
        self.dataset = dataset
        self._lock = threading.Lock()
        self._normalized: dict[tuple[Normalization, str], DistanceMatrix] = {}
        self._results: dict[EngineConfig, ComputedView] = {}
        self._current: ComputedView | None = None

    # --- matrices ---

    def normalized(self, space_name: str, mode: Normalization) -> DistanceMatrix:
        if space_name not in self.dataset.raw_distances:
            raise UnknownSpace(space_name)
        key = (mode, space_name)
        with self._lock:
            if key not in self._normalized:
                self._normalized[key] = normalize(self.dataset.raw_distances[space_name], mode)
            return self._normalized[key]

    def normalized_all(self, mode: Normalization) -> dict[str, DistanceMatrix]:
        return {s.name: self.normalized(s.name, mode) for s in self.dataset.spaces}

    # --- dendrogram + annotation ---

    def compute(self, config: EngineConfig) -> ComputedView:
        """Build (or fetch from cache) everything the dendrogram view needs."""
        with self._lock:
            cached = self._results.get(config)
        if cached is not None:
            with self._lock:
                self._current = cached
            return cached

        d_primary = self.normalized(config.primary_space, config.normalization)
        d_alt = self.normalized(config.alternative_space, config.normalization)
        dendrogram = order_leaves(agnes(d_primary, config.linkage), d_primary)
        annotation = annotate(dendrogram, d_primary, d_alt, config.diam_kind)
        bounds = resolve_bounds(annotation, config.color_bounds)
        colors = {nid: color_value(v, bounds) for nid, v in annotation.per_node.items()}
        # the vertical segment is the precise counterpart of the hue channel,
        # so it shares the hue's bounds-normalized magnitude
        segments = {nid: abs(c) for nid, c in colors.items()}
        view = ComputedView(
            config=config,
            config_hash=config.hash(),
            dendrogram=dendrogram,
            annotation=annotation,
            color_values=colors,
            segment_lengths=segments,
        )
        with self._lock:
            self._results.setdefault(config, view)
            self._current = self._results[config]
            return self._current

    def dendrogram_payload(self, config: EngineConfig) -> dict:
        view = self.compute(config)
        return {
            "dendrogram": view.dendrogram.to_json(),
            "annotation": view.annotation.to_json(),
            "colorValues": {str(k): v for k, v in view.color_values.items()},
            "verticalSegmentLengths": {str(k): v for k, v in view.segment_lengths.items()},
            "palette": palette_for(config.normalization),
            "configHash": view.config_hash,
        }

    # --- cluster-level queries against the current configuration ---

    @property
    def current(self) -> ComputedView:
        with self._lock:
            if self._current is None:
                raise NoConfiguration("request a dendrogram first")
            return self._current

    def members_payload(self, node_id: int, sort_space: str | None) -> dict:
        view = self.current
        if not 0 <= node_id < len(view.dendrogram.nodes):
            raise UnknownNode(node_id)
        sort_space = sort_space or view.config.primary_space
        matrix = self.normalized(sort_space, view.config.normalization)
        node = view.dendrogram.node(node_id)
        result = gallery_order(node.members, matrix)
        cases = self.dataset.cases
        return {
            "node": node_id,
            "sortSpace": sort_space,
            "converged": result.converged,
            "members": [
                {
                    "case": case_idx,
                    "id": cases[case_idx].id,
                    "label": cases[case_idx].label,
                    "coord": coord,
                }
                for case_idx, coord in zip(result.order, result.coords)
            ],
        }

    def subset_payload(self, node_id: int) -> dict:
        view = self.current
        if not 0 <= node_id < len(view.dendrogram.nodes):
            raise UnknownNode(node_id)
        node = view.dendrogram.node(node_id)
        table = subset_sensitivity(
            node_id,
            node.members,
            self.normalized_all(view.config.normalization),
            view.config.primary_space,
            view.config.diam_kind,
        )
        return table.to_json()

    # --- dataset-level queries ---

    def summary_payload(self) -> dict:
        ds = self.dataset
        return {
            "name": ds.name,
            "cases": [{"id": c.id, "label": c.label, "tags": c.tags} for c in ds.cases],
            "spaces": [
                {
                    "name": s.name,
                    "kind": s.kind.value,
                    "payloadType": s.payload_type.value,
                    "hasPayloads": s.has_payloads,
                }
                for s in ds.spaces
            ],
        }

    def shepard_payload(self, mode: Normalization | None = None) -> dict:
        if mode is None:
            with self._lock:
                current = self._current
            mode = current.config.normalization if current else Normalization.MINMAX
        matrices = [self.normalized(s.name, mode) for s in self.dataset.spaces]
        return {
            "normalization": mode.value,
            "panels": [p.to_json() for p in shepard_matrix(matrices)],
        }

    def case_payload(self, case_id: str, space_name: str):
        try:
            idx = self.dataset.case_index(case_id)
        except KeyError:
            raise UnknownCase(case_id) from None
        try:
            space = self.dataset.space(space_name)
        except KeyError:
            raise UnknownSpace(space_name) from None
        if space.payloads is None or space.payload_type is PayloadType.OPAQUE:
            raise PayloadUnavailable(space_name)
        return payload_to_json(space.payloads[idx], space.payload_type)
