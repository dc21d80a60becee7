from __future__ import annotations

import json

import numpy as np
import pytest

from discrep.core import DistanceMatrix, Normalization
from discrep.synth import parabola_dataset


@pytest.fixture(scope="session")
def parabola():
    return parabola_dataset(64)


@pytest.fixture
def matrix():
    """Wrap a raw ndarray (or nested lists) as a DistanceMatrix."""

    def make(values, normalization=Normalization.RAW, space="S"):
        return DistanceMatrix(space, np.asarray(values, dtype=float), normalization)

    return make


@pytest.fixture
def write_manifest(tmp_path):
    """Write a manifest document (plus optional sidecar files) to a tmp dir."""

    def write(doc, files=None):
        for name, content in (files or {}).items():
            path = tmp_path / name
            if isinstance(content, str):
                path.write_text(content)
            else:
                path.write_text(json.dumps(content))
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps(doc))
        return path

    return write
