"""View payload computation: Shepard panels, 1D MDS orderings, subset tables.

Everything here is a pure function of normalized distance matrices; rendering
lives in the web client.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cluster import Linkage
from .core import DistanceMatrix
from .sensitivity import diameter, index

MDS_TOLERANCE = 1e-10
MDS_MAX_ITERATIONS = 10_000


@dataclass(eq=False)
class ShepardPanel:
    """All pairwise distances of two spaces, one point per unordered case pair.

    ``off_diag`` is dy - dx, the two-element-cluster index of the pair; it
    drives the same diverging hue scale as the dendrogram.
    """

    space_x: str
    space_y: str
    normalization: str
    i: np.ndarray
    j: np.ndarray
    dx: np.ndarray
    dy: np.ndarray

    @property
    def off_diag(self) -> np.ndarray:
        return self.dy - self.dx

    def to_json(self) -> dict:
        return {
            "spaceX": self.space_x,
            "spaceY": self.space_y,
            "normalization": self.normalization,
            "points": [
                {
                    "i": int(a),
                    "j": int(b),
                    "dx": float(x),
                    "dy": float(y),
                    "offDiag": float(y - x),
                }
                for a, b, x, y in zip(self.i, self.j, self.dx, self.dy)
            ],
        }


def shepard_panel(dx_matrix: DistanceMatrix, dy_matrix: DistanceMatrix) -> ShepardPanel:
    if dx_matrix.n != dy_matrix.n:
        raise ValueError("matrices cover different case counts")
    if dx_matrix.normalization is not dy_matrix.normalization:
        raise ValueError("Shepard panels need matrices under one normalization")
    n = dx_matrix.n
    iu = np.triu_indices(n, k=1)
    return ShepardPanel(
        space_x=dx_matrix.space_name,
        space_y=dy_matrix.space_name,
        normalization=dx_matrix.normalization.value,
        i=iu[0],
        j=iu[1],
        dx=dx_matrix.values[iu],
        dy=dy_matrix.values[iu],
    )


def shepard_matrix(matrices: list[DistanceMatrix]) -> list[ShepardPanel]:
    """One panel per unordered space pair, in the given space order."""
    panels = []
    for a in range(len(matrices)):
        for b in range(a + 1, len(matrices)):
            panels.append(shepard_panel(matrices[a], matrices[b]))
    return panels


@dataclass(eq=False)
class Mds1dResult:
    order: list[int]  # member case indices, sorted by 1D coordinate
    coords: list[float]  # aligned with order
    converged: bool  # False means the power iteration failed; order fell back


def mds1d(D: DistanceMatrix, members) -> Mds1dResult:
    """Classical 1D MDS over a member subset, deterministic in every detail.

    Double-centers the squared-distance matrix and extracts the dominant
    eigenvector by power iteration (the iteration is shifted to target the
    algebraically largest eigenvalue and kept orthogonal to the all-ones null
    direction). The axis orientation is fixed so the first member in case
    order gets a nonpositive coordinate. Degenerate inputs and non-convergence
    fall back to case-index order, the latter with ``converged=False``.
    """
    m = sorted(int(v) for v in members)
    k = len(m)
    if k == 0:
        raise ValueError("need at least one member")
    if k == 1:
        return Mds1dResult(order=m, coords=[0.0], converged=True)
    if k == 2:
        half = float(D.values[m[0], m[1]]) / 2.0
        return Mds1dResult(order=m, coords=[-half, half], converged=True)

    sq = D.values[np.ix_(m, m)] ** 2
    row = sq.mean(axis=1, keepdims=True)
    col = sq.mean(axis=0, keepdims=True)
    gram = -0.5 * (sq - row - col + sq.mean())

    scale = float(np.linalg.norm(gram))
    if scale == 0.0:
        return Mds1dResult(order=m, coords=[0.0] * k, converged=True)

    rng = np.random.default_rng(0)
    v = rng.standard_normal(k)
    v -= v.mean()
    v /= np.linalg.norm(v)
    converged = False
    for _ in range(MDS_MAX_ITERATIONS):
        w = gram @ v + scale * v  # shift keeps the target eigenvalue dominant
        w -= w.mean()
        norm = np.linalg.norm(w)
        if norm < 1e-30:
            break
        w /= norm
        if np.linalg.norm(w - v) < MDS_TOLERANCE:
            v = w
            converged = True
            break
        v = w
    if not converged:
        return Mds1dResult(order=m, coords=[0.0] * k, converged=False)

    eigenvalue = float(v @ (gram @ v))
    if eigenvalue <= 0.0:
        # no positive-variance axis exists; treat like the degenerate case
        return Mds1dResult(order=m, coords=[0.0] * k, converged=True)
    coords = np.sqrt(eigenvalue) * v
    if coords[0] > 0:
        coords = -coords
    perm = np.argsort(coords, kind="stable")
    return Mds1dResult(
        order=[m[p] for p in perm],
        coords=[float(coords[p]) for p in perm],
        converged=True,
    )


def gallery_order(members, sort_matrix: DistanceMatrix) -> Mds1dResult:
    """Gallery display order: 1D MDS over the sort space's normalized distances."""
    return mds1d(sort_matrix, members)


@dataclass(frozen=True)
class SubsetRow:
    space_name: str
    diameter: float
    index_vs_primary: float


@dataclass(eq=False)
class SubsetSensitivityTable:
    node_id: int
    primary_space: str
    rows: list[SubsetRow]  # sorted by descending |index|, stable in space order

    def to_json(self) -> dict:
        return {
            "clusterNode": self.node_id,
            "primarySpace": self.primary_space,
            "rows": [
                {
                    "spaceName": r.space_name,
                    "diameterInSpace": r.diameter,
                    "indexVsPrimary": r.index_vs_primary,
                }
                for r in self.rows
            ],
        }


def subset_sensitivity(
    node_id: int,
    members,
    matrices: dict[str, DistanceMatrix],
    primary_space: str,
    diam_kind: Linkage,
) -> SubsetSensitivityTable:
    """Per-space diameter and index of one cluster, ranked by index magnitude.

    ``matrices`` maps every space to its normalized matrix, in dataset space
    order; the primary space gets a row too (its index is 0 by antisymmetry).
    """
    primary = matrices[primary_space]
    rows = [
        SubsetRow(
            space_name=name,
            diameter=diameter(members, matrix, diam_kind),
            index_vs_primary=index(members, primary, matrix, diam_kind),
        )
        for name, matrix in matrices.items()
    ]
    rows.sort(key=lambda r: -abs(r.index_vs_primary))
    return SubsetSensitivityTable(node_id=node_id, primary_space=primary_space, rows=rows)
