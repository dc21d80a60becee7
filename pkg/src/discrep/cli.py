"""Command-line entry point: validate datasets, batch computations, serve the API.

Exit codes: 0 success, 1 input/validation error, 2 internal error. Batch
outputs are plain JSON files in the same shapes the HTTP API serves, so a UI
session is reproducible headlessly with the matching flags.
"""

from __future__ import annotations

import json
import socket
import sys
from pathlib import Path

import click

from .cluster import Linkage
from .core import Normalization, load_dataset
from .errors import ManifestError
from .service.app import create_app
from .service.session import AnalysisSession, EngineConfig, UnknownSpace
from .synth import PARABOLA_SEED, write_parabola_manifest


def _fail(message: str, code: int = 1):
    click.echo(message, err=True)
    sys.exit(code)


def _load(manifest: str):
    try:
        return load_dataset(manifest)
    except ManifestError as exc:
        _fail(str(exc))


def _write_json(payload: dict, out: str):
    Path(out).write_text(json.dumps(payload, indent=2) + "\n")
    click.echo(f"wrote {out}")


@click.group()
def main():
    """Cluster-based sensitivity analysis over dissimilarity spaces."""


@main.command()
@click.argument("manifest", type=click.Path())
def validate(manifest):
    """Load and validate MANIFEST; exit 1 with a report on the first violation."""
    dataset = _load(manifest)
    click.echo(
        f"OK: {dataset.name!r} with {dataset.n} cases and {len(dataset.spaces)} spaces"
    )


config_options = [
    click.option("--primary", required=True, help="space the dendrogram is built from"),
    click.option("--alt", required=True, help="space compared against in the index"),
    click.option(
        "--linkage",
        type=click.Choice([l.value for l in Linkage]),
        default="complete",
        show_default=True,
    ),
    click.option(
        "--diam",
        type=click.Choice([l.value for l in Linkage]),
        default=None,
        help="cluster diameter kind [default: follows --linkage]",
    ),
    click.option(
        "--norm",
        type=click.Choice(["rank", "minmax"]),
        default="minmax",
        show_default=True,
    ),
    click.option(
        "--color-bounds",
        type=click.Choice(["theoretical", "data"]),
        default="theoretical",
        show_default=True,
    ),
]


def _with_options(options):
    def wrap(fn):
        for option in reversed(options):
            fn = option(fn)
        return fn

    return wrap


@main.command()
@click.argument("manifest", type=click.Path())
@_with_options(config_options)
@click.option("--out", required=True, type=click.Path(), help="output JSON file")
def dendrogram(manifest, primary, alt, linkage, diam, norm, color_bounds, out):
    """Compute the annotated dendrogram for MANIFEST and write it to --out."""
    dataset = _load(manifest)
    session = AnalysisSession(dataset)
    config = EngineConfig(
        primary_space=primary,
        alternative_space=alt,
        linkage=Linkage(linkage),
        diam_kind=Linkage(diam or linkage),
        normalization=Normalization(norm),
        color_bounds=color_bounds,
    )
    try:
        payload = session.dendrogram_payload(config)
    except UnknownSpace as exc:
        _fail(f"UnknownSpace: {exc.args[0]!r} is not a space of this dataset")
    _write_json(payload, out)


@main.command()
@click.argument("manifest", type=click.Path())
@click.option("--norm", type=click.Choice(["rank", "minmax"]), default="minmax", show_default=True)
@click.option("--out", required=True, type=click.Path(), help="output JSON file")
def shepard(manifest, norm, out):
    """Write the Shepard panel matrix of all space pairs to --out."""
    dataset = _load(manifest)
    session = AnalysisSession(dataset)
    _write_json(session.shepard_payload(Normalization(norm)), out)


@main.command()
@click.argument("manifest", type=click.Path())
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", type=click.Path(exists=True, file_okay=False), default=None,
              help="serve a built web client from this directory")
def serve(manifest, port, host, ui):
    """Serve the read-only analysis API for MANIFEST until interrupted."""
    import uvicorn

    dataset = _load(manifest)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError:
        _fail(f"PortInUse: cannot bind {host}:{port}")
    finally:
        probe.close()
    app = create_app(dataset, ui_dir=ui)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command()
@click.argument("target", type=click.Choice(["parabola"]))
@click.option("--n", default=64, show_default=True, type=int)
@click.option("--seed", default=PARABOLA_SEED, show_default=True, type=int)
@click.option("--out", required=True, type=click.Path(), help="output dataset directory")
def synth(target, n, seed, out):
    """Generate a synthetic example dataset into --out."""
    try:
        path = write_parabola_manifest(n=n, out_dir=out, seed=seed)
    except ValueError as exc:
        _fail(str(exc))
    click.echo(f"wrote {path}")


if __name__ == "__main__":
    main()
