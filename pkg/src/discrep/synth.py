"""Synthetic example datasets."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import DataCase, Dataset, DistanceSpec, PayloadType, Space, SpaceKind, build_dataset, save_dataset

# Seed pinned: the bundled parabola example and its documented three-cluster
# split depend on this exact sample, and batch outputs must be reproducible
# byte for byte.
PARABOLA_SEED = 23


def parabola_dataset(n: int = 64, seed: int = PARABOLA_SEED) -> Dataset:
    """The y = x^2 example: x sampled uniformly over [-4, 4], endpoints included.

    Space X (parameter) holds the samples, space Y (output) their squares,
    both with the builtin euclidean distance.
    """
    if n < 2:
        raise ValueError(f"need at least 2 cases, got {n}")
    rng = np.random.default_rng(seed)
    x = np.sort(np.concatenate([[-4.0, 4.0], rng.uniform(-4.0, 4.0, n - 2)]))
    y = x * x
    width = len(str(n - 1))
    cases = [
        DataCase(id=f"c{k:0{width}d}", label=f"x={x[k]:+.3f}") for k in range(n)
    ]
    spaces = [
        Space(
            name="X",
            kind=SpaceKind.PARAMETER,
            payload_type=PayloadType.SCALAR,
            distance_spec=DistanceSpec(kind="builtin", measure="euclidean"),
            payloads=[float(v) for v in x],
        ),
        Space(
            name="Y",
            kind=SpaceKind.OUTPUT,
            payload_type=PayloadType.SCALAR,
            distance_spec=DistanceSpec(kind="builtin", measure="euclidean"),
            payloads=[float(v) for v in y],
        ),
    ]
    return build_dataset("parabola", cases, spaces)


def write_parabola_manifest(n: int, out_dir: str | Path, seed: int = PARABOLA_SEED) -> Path:
    return save_dataset(parabola_dataset(n=n, seed=seed), out_dir)
