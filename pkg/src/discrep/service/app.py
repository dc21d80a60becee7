"""FastAPI application wrapping one analysis session.

Read-only: no endpoint mutates the dataset. POST /api/dendrogram computes a
view under the posted configuration (cached by config hash) and makes it the
session's current one; the cluster-level GET endpoints operate on that.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..core import Dataset
from . import schemas
from .session import (
    AnalysisSession,
    NoConfiguration,
    PayloadUnavailable,
    UnknownCase,
    UnknownNode,
    UnknownSpace,
)


def _error(status: int, code: str, detail: str = "") -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


class NoDatasetLoaded(Exception):
    pass


def create_app(
    dataset: Dataset | None,
    allow_origins: list[str] | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="discrep", docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=allow_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    session = AnalysisSession(dataset) if dataset is not None else None
    app.state.session = session

    @app.exception_handler(RequestValidationError)
    async def bad_request(request: Request, exc: RequestValidationError):
        codes = {e.get("type", "") for e in exc.errors()}
        bad_enum = any(c.startswith("literal_error") or c.startswith("enum") for c in codes)
        return _error(400, "BadEnum" if bad_enum else "InvalidRequest", str(exc.errors()[:3]))

    def require_session() -> AnalysisSession:
        if session is None:
            raise NoDatasetLoaded()
        return session

    @app.exception_handler(NoDatasetLoaded)
    async def no_dataset(request: Request, exc: NoDatasetLoaded):
        return _error(404, "NoDataset", "no dataset is loaded")

    @app.exception_handler(UnknownSpace)
    async def unknown_space(request: Request, exc: UnknownSpace):
        return _error(400, "UnknownSpace", f"unknown space {exc.args[0]!r}")

    @app.exception_handler(UnknownNode)
    async def unknown_node(request: Request, exc: UnknownNode):
        return _error(404, "UnknownNode", f"unknown node {exc.args[0]!r}")

    @app.exception_handler(UnknownCase)
    async def unknown_case(request: Request, exc: UnknownCase):
        return _error(404, "UnknownCase", f"unknown case {exc.args[0]!r}")

    @app.exception_handler(PayloadUnavailable)
    async def payload_unavailable(request: Request, exc: PayloadUnavailable):
        return _error(404, "PayloadUnavailable", f"space {exc.args[0]!r} carries no payloads")

    @app.exception_handler(NoConfiguration)
    async def no_configuration(request: Request, exc: NoConfiguration):
        return _error(404, "NoDendrogram", "post a configuration to /api/dendrogram first")

    @app.get("/api/dataset", response_model=schemas.DatasetSummary)
    def get_dataset():
        return require_session().summary_payload()

    @app.post("/api/dendrogram", response_model=schemas.DendrogramResponse)
    def post_dendrogram(config: schemas.SessionConfig):
        s = require_session()
        engine_config = config.engine_config()
        for name in (engine_config.primary_space, engine_config.alternative_space):
            if name not in s.dataset.raw_distances:
                raise UnknownSpace(name)
        if config.leafSpace is not None and config.leafSpace not in s.dataset.raw_distances:
            raise UnknownSpace(config.leafSpace)
        return s.dendrogram_payload(engine_config)

    @app.get("/api/cluster/{node_id}/members", response_model=schemas.MembersResponse)
    def get_members(node_id: int, sortSpace: str | None = None):
        return require_session().members_payload(node_id, sortSpace)

    @app.get("/api/cluster/{node_id}/subset-sensitivity", response_model=schemas.SubsetTableResponse)
    def get_subset(node_id: int):
        return require_session().subset_payload(node_id)

    @app.get("/api/shepard", response_model=schemas.ShepardResponse)
    def get_shepard():
        return require_session().shepard_payload()

    @app.get("/api/case/{case_id}/space/{space_name}")
    def get_case_payload(case_id: str, space_name: str):
        try:
            return require_session().case_payload(case_id, space_name)
        except UnknownSpace as exc:
            # everything about this path resolves case-level resources: 404
            return _error(404, "UnknownSpace", f"unknown space {exc.args[0]!r}")

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
