"""Pydantic request/response models for the HTTP API.

Field names mirror the JSON wire format (camelCase) one to one.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..cluster import Linkage
from ..core import Normalization
from .session import EngineConfig


class SessionConfig(BaseModel):
    """A full view configuration as posted by the client.

    ``leafSpace`` and ``collapsedNodes`` are display state; the server echoes
    them back untouched and excludes them from the computation cache key.
    ``diamKind`` defaults to the linkage criterion when omitted.
    """

    primarySpace: str
    alternativeSpace: str
    leafSpace: str | None = None
    linkage: Literal["complete", "average"] = "complete"
    diamKind: Literal["complete", "average"] | None = None
    normalization: Literal["rank", "minmax"] = "minmax"
    colorBounds: Literal["theoretical", "data"] = "theoretical"
    collapsedNodes: list[int] = Field(default_factory=list)

    def engine_config(self) -> EngineConfig:
        return EngineConfig(
            primary_space=self.primarySpace,
            alternative_space=self.alternativeSpace,
            linkage=Linkage(self.linkage),
            diam_kind=Linkage(self.diamKind or self.linkage),
            normalization=Normalization(self.normalization),
            color_bounds=self.colorBounds,
        )


class CaseSummary(BaseModel):
    id: str
    label: str
    tags: dict[str, str]


class SpaceSummary(BaseModel):
    name: str
    kind: str
    payloadType: str
    hasPayloads: bool


class DatasetSummary(BaseModel):
    name: str
    cases: list[CaseSummary]
    spaces: list[SpaceSummary]


class DendrogramNode(BaseModel):
    id: int
    height: float
    members: list[int]
    children: tuple[int, int] | None
    representative: int


class DendrogramPayload(BaseModel):
    space: str
    linkage: str
    normalization: str
    leafOrder: list[int]
    nodes: list[DendrogramNode]


class AnnotationBounds(BaseModel):
    theoretical: tuple[float, float]
    data: tuple[float, float]


class AnnotationPayload(BaseModel):
    primary: str
    alternative: str
    diam: str
    bounds: AnnotationBounds
    perNode: dict[int, float]


class DendrogramResponse(BaseModel):
    dendrogram: DendrogramPayload
    annotation: AnnotationPayload
    colorValues: dict[int, float]
    verticalSegmentLengths: dict[int, float]
    palette: str
    configHash: str


class MemberEntry(BaseModel):
    case: int
    id: str
    label: str
    coord: float


class MembersResponse(BaseModel):
    node: int
    sortSpace: str
    converged: bool
    members: list[MemberEntry]


class SubsetRowPayload(BaseModel):
    spaceName: str
    diameterInSpace: float
    indexVsPrimary: float


class SubsetTableResponse(BaseModel):
    clusterNode: int
    primarySpace: str
    rows: list[SubsetRowPayload]


class ShepardPoint(BaseModel):
    i: int
    j: int
    dx: float
    dy: float
    offDiag: float


class ShepardPanelPayload(BaseModel):
    spaceX: str
    spaceY: str
    normalization: str
    points: list[ShepardPoint]


class ShepardResponse(BaseModel):
    normalization: str
    panels: list[ShepardPanelPayload]


class ApiError(BaseModel):
    error: str
    detail: str = ""
