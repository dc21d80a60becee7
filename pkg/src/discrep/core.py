"""Dataset model: cases, spaces, payloads, distance matrices, manifest I/O.

A dataset is a collection of N data cases observed in several named spaces
(model parameters and outputs). Every space resolves to one symmetric NxN
raw distance matrix, either computed from payloads with a builtin measure
or loaded from a precomputed file. All downstream computation consumes the
matrices only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import ManifestError, MeasureError, Violation

# Diagonal entries within this tolerance of zero are snapped to exactly zero;
# anything larger in a precomputed matrix is a NonZeroDiagonal error.
DIAGONAL_TOLERANCE = 1e-9


class SpaceKind(str, Enum):
    PARAMETER = "parameter"
    OUTPUT = "output"


class PayloadType(str, Enum):
    SCALAR = "scalar"
    VECTOR = "vector"
    TIME_SERIES = "timeSeries"
    GRID2D = "grid2d"
    RING_KERNEL = "ringKernel"
    REGIONALIZATION = "regionalization"
    OPAQUE = "opaque"


class Normalization(str, Enum):
    RAW = "raw"
    RANK = "rank"
    MINMAX = "minmax"


@dataclass(frozen=True)
class DataCase:
    """One (parameter setting, output) observation; the unit being clustered."""

    id: str
    label: str
    tags: dict[str, str] = field(default_factory=dict)


@dataclass(eq=False)
class TimeSeries:
    times: np.ndarray
    values: np.ndarray


@dataclass(eq=False)
class Grid2d:
    rows: int
    cols: int
    values: np.ndarray  # row-major, length rows*cols
    mask: np.ndarray | None = None  # True marks cells excluded from comparison


@dataclass(frozen=True)
class RingKernel:
    inner: float
    outer: float
    units: str


@dataclass(frozen=True)
class DistanceSpec:
    kind: str  # "builtin" | "precomputed"
    measure: str | None = None  # builtin measure name
    file: str | None = None  # path of the precomputed matrix, relative to the manifest
    format: str | None = None  # "csv" | "json"


@dataclass(eq=False)
class Space:
    """One named parameter or output dimension, equipped with a dissimilarity."""

    name: str
    kind: SpaceKind
    payload_type: PayloadType
    distance_spec: DistanceSpec
    payloads: list | None = None

    @property
    def has_payloads(self) -> bool:
        return self.payloads is not None


@dataclass(eq=False)
class DistanceMatrix:
    """Dense symmetric nonnegative dissimilarities for one space."""

    space_name: str
    values: np.ndarray
    normalization: Normalization = Normalization.RAW

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(eq=False)
class Dataset:
    name: str
    cases: list[DataCase]
    spaces: list[Space]
    raw_distances: dict[str, DistanceMatrix]

    @property
    def n(self) -> int:
        return len(self.cases)

    def space(self, name: str) -> Space:
        for s in self.spaces:
            if s.name == name:
                return s
        raise KeyError(name)

    def case_index(self, case_id: str) -> int:
        for i, c in enumerate(self.cases):
            if c.id == case_id:
                return i
        raise KeyError(case_id)


def validate_matrix(values: np.ndarray, diagonal_tol: float = 0.0) -> list[Violation]:
    """Check a square matrix against the distance-matrix invariants.

    Returns one violation per broken rule, each pointing at the first
    offending cell. An empty list means the matrix is a valid raw
    dissimilarity matrix (up to ``diagonal_tol`` noise on the diagonal).
    """
    values = np.asarray(values, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {values.shape}")
    violations: list[Violation] = []

    bad = ~np.isfinite(values)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        violations.append(Violation("NonFiniteDistance", (int(i), int(j))))
        return violations  # NaNs poison the remaining comparisons

    asym = values != values.T
    if asym.any():
        i, j = np.argwhere(np.triu(asym, 1))[0]
        violations.append(Violation("AsymmetricMatrix", (int(i), int(j))))

    diag = np.abs(np.diagonal(values))
    if (diag > diagonal_tol).any():
        i = int(np.argmax(diag > diagonal_tol))
        violations.append(Violation("NonZeroDiagonal", (i, i)))

    neg = values < 0
    if neg.any():
        i, j = np.argwhere(neg)[0]
        violations.append(Violation("NegativeDistance", (int(i), int(j))))

    return violations


def _frozen(values: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(values, dtype=float)
    out.flags.writeable = False
    return out


def build_dataset(
    name: str,
    cases: list[DataCase],
    spaces: list[Space],
    precomputed: dict[str, np.ndarray] | None = None,
) -> Dataset:
    """Assemble and fully validate a dataset from parsed parts.

    Builtin distances are computed eagerly so that everything downstream is a
    pure function of matrices. Precomputed matrices are validated against the
    distance-matrix invariants, with near-zero diagonals snapped to zero.
    """
    from . import dissimilarity  # deferred: dissimilarity uses payload types from here

    precomputed = precomputed or {}
    n = len(cases)
    if n < 2:
        raise ManifestError("ManifestSyntax", f"dataset needs at least 2 cases, got {n}")
    seen: set[str] = set()
    for c in cases:
        if c.id in seen:
            raise ManifestError("ManifestSyntax", f"duplicate case id {c.id!r}")
        seen.add(c.id)
    if not spaces:
        raise ManifestError("ManifestSyntax", "dataset declares no spaces")

    raw: dict[str, DistanceMatrix] = {}
    for space in spaces:
        if space.name in raw:
            raise ManifestError("ManifestSyntax", f"duplicate space name {space.name!r}")
        if space.payloads is not None and len(space.payloads) != n:
            raise ManifestError(
                "SizeMismatch",
                f"space {space.name!r} has {len(space.payloads)} payloads for {n} cases",
            )
        spec = space.distance_spec
        if spec.kind == "builtin":
            if space.payload_type is PayloadType.OPAQUE:
                raise ManifestError(
                    "IncompatibleMeasure",
                    f"space {space.name!r}: opaque payloads require a precomputed distance",
                )
            if spec.measure not in dissimilarity.COMPATIBLE_TYPES:
                raise ManifestError(
                    "IncompatibleMeasure",
                    f"space {space.name!r}: unknown builtin measure {spec.measure!r}",
                )
            if space.payload_type not in dissimilarity.COMPATIBLE_TYPES[spec.measure]:
                raise ManifestError(
                    "IncompatibleMeasure",
                    f"space {space.name!r}: measure {spec.measure!r} does not apply to "
                    f"{space.payload_type.value} payloads",
                )
            if space.payloads is None:
                raise ManifestError(
                    "ManifestSyntax",
                    f"space {space.name!r}: builtin distance requires payloads",
                )
            try:
                matrix = dissimilarity.build_raw_matrix(space)
            except MeasureError as exc:
                raise ManifestError(exc.code, f"space {space.name!r}: {exc.message}") from exc
        elif spec.kind == "precomputed":
            if space.name not in precomputed:
                raise ManifestError(
                    "ManifestSyntax", f"space {space.name!r}: precomputed matrix missing"
                )
            values = np.asarray(precomputed[space.name], dtype=float)
            if values.ndim != 2 or values.shape != (n, n):
                raise ManifestError(
                    "SizeMismatch",
                    f"space {space.name!r}: matrix shape {values.shape} does not match "
                    f"{n} cases",
                )
            violations = validate_matrix(values, diagonal_tol=DIAGONAL_TOLERANCE)
            if violations:
                raise ManifestError(
                    violations[0].code, f"space {space.name!r}: {violations[0]}"
                )
            values = values.copy()
            np.fill_diagonal(values, 0.0)
            matrix = DistanceMatrix(space.name, _frozen(values), Normalization.RAW)
        else:
            raise ManifestError(
                "ManifestSyntax", f"space {space.name!r}: unknown distance kind {spec.kind!r}"
            )
        raw[space.name] = matrix

    return Dataset(name=name, cases=cases, spaces=spaces, raw_distances=raw)


# --- payload (de)serialization ---


def parse_payload(value, payload_type: PayloadType, where: str):
    """Convert one JSON payload value into its in-memory form, validating it."""

    def fail(msg: str):
        raise ManifestError("ManifestSyntax", f"{where}: {msg}")

    if payload_type is PayloadType.SCALAR:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            fail(f"scalar payload must be a number, got {type(value).__name__}")
        v = float(value)
        if not np.isfinite(v):
            fail("scalar payload must be finite")
        return v

    if payload_type is PayloadType.VECTOR:
        if not isinstance(value, list) or not value:
            fail("vector payload must be a non-empty array")
        arr = np.asarray(value, dtype=float)
        if arr.ndim != 1 or not np.isfinite(arr).all():
            fail("vector payload must be a flat array of finite numbers")
        return arr

    if payload_type is PayloadType.TIME_SERIES:
        if not isinstance(value, list) or not value:
            fail("time series payload must be a non-empty array of [t, v] pairs")
        try:
            pairs = np.asarray(value, dtype=float)
        except (TypeError, ValueError):
            pairs = None
        if pairs is None or pairs.ndim != 2 or pairs.shape[1] != 2:
            fail("time series payload must be an array of [t, v] pairs")
        if not np.isfinite(pairs).all():
            fail("time series payload must be finite")
        t = pairs[:, 0]
        if not (np.diff(t) > 0).all():
            fail("time series t values must be strictly increasing")
        return TimeSeries(times=t.copy(), values=pairs[:, 1].copy())

    if payload_type is PayloadType.GRID2D:
        if not isinstance(value, dict):
            fail("grid payload must be an object with rows, cols, values")
        try:
            rows, cols = int(value["rows"]), int(value["cols"])
            cells = np.asarray(value["values"], dtype=float)
        except (KeyError, TypeError, ValueError):
            fail("grid payload must provide rows, cols and a numeric values array")
        if rows < 1 or cols < 1 or cells.ndim != 1 or cells.size != rows * cols:
            fail(f"grid values length {cells.size} does not equal rows*cols = {rows * cols}")
        if not np.isfinite(cells).all():
            fail("grid values must be finite")
        mask = None
        if value.get("mask") is not None:
            mask = np.asarray(value["mask"], dtype=bool)
            if mask.shape != cells.shape:
                fail("grid mask must have one boolean per cell")
        return Grid2d(rows=rows, cols=cols, values=cells, mask=mask)

    if payload_type is PayloadType.RING_KERNEL:
        if not isinstance(value, dict):
            fail("ring kernel payload must be an object with inner, outer, units")
        try:
            inner, outer = float(value["inner"]), float(value["outer"])
            units = str(value["units"])
        except (KeyError, TypeError, ValueError):
            fail("ring kernel payload must provide inner, outer and units")
        if not (np.isfinite(inner) and np.isfinite(outer)) or not 0 <= inner < outer:
            fail(f"ring kernel radii must satisfy 0 <= inner < outer, got ({inner}, {outer})")
        return RingKernel(inner=inner, outer=outer, units=units)

    if payload_type is PayloadType.REGIONALIZATION:
        if not isinstance(value, list) or not value:
            fail("regionalization payload must be a non-empty array of region labels")
        arr = np.asarray(value)
        if arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
            fail("regionalization payload must be a flat array of integer labels")
        return arr.astype(np.int64)

    fail(f"payload type {payload_type.value} carries no payloads")


def payload_to_json(payload, payload_type: PayloadType):
    """Inverse of :func:`parse_payload`; value is JSON-serializable."""
    if payload_type is PayloadType.SCALAR:
        return float(payload)
    if payload_type is PayloadType.VECTOR:
        return [float(v) for v in payload]
    if payload_type is PayloadType.TIME_SERIES:
        return [[float(t), float(v)] for t, v in zip(payload.times, payload.values)]
    if payload_type is PayloadType.GRID2D:
        doc = {
            "rows": payload.rows,
            "cols": payload.cols,
            "values": [float(v) for v in payload.values],
        }
        if payload.mask is not None:
            doc["mask"] = [bool(b) for b in payload.mask]
        return doc
    if payload_type is PayloadType.RING_KERNEL:
        return {"inner": payload.inner, "outer": payload.outer, "units": payload.units}
    if payload_type is PayloadType.REGIONALIZATION:
        return [int(v) for v in payload]
    raise ValueError(f"payload type {payload_type.value} carries no payloads")


# --- manifest I/O ---


def _expect(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ManifestError("ManifestSyntax", f"{where}: missing key {key!r}")
    return doc[key]


def _parse_enum(enum_cls, raw, where: str):
    try:
        return enum_cls(raw)
    except ValueError:
        options = ", ".join(e.value for e in enum_cls)
        raise ManifestError(
            "ManifestSyntax", f"{where}: {raw!r} is not one of {options}"
        ) from None


def load_dataset(manifest_path: str | Path) -> Dataset:
    """Load and fully validate a dataset from a JSON manifest.

    Builtin distances are computed eagerly; precomputed matrices are read from
    their sidecar files (CSV without header, or a JSON array of arrays) and
    checked against every invariant.
    """
    path = Path(manifest_path)
    if not path.is_file():
        raise ManifestError("ManifestSyntax", f"manifest file not found: {path}")
    try:
        doc = json.loads(path.read_text())
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ManifestError("ManifestSyntax", f"{path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ManifestError("ManifestSyntax", f"{path}: manifest must be a JSON object")
    base = path.parent

    name = str(_expect(doc, "name", "manifest"))
    raw_cases = _expect(doc, "cases", "manifest")
    if not isinstance(raw_cases, list):
        raise ManifestError("ManifestSyntax", "manifest: cases must be an array")
    cases = []
    for k, entry in enumerate(raw_cases):
        where = f"cases[{k}]"
        cid = str(_expect(entry, "id", where))
        label = str(entry.get("label", cid))
        tags = entry.get("tags", {})
        if not isinstance(tags, dict):
            raise ManifestError("ManifestSyntax", f"{where}: tags must be an object")
        cases.append(DataCase(id=cid, label=label, tags={str(a): str(b) for a, b in tags.items()}))

    raw_spaces = _expect(doc, "spaces", "manifest")
    if not isinstance(raw_spaces, list):
        raise ManifestError("ManifestSyntax", "manifest: spaces must be an array")
    spaces: list[Space] = []
    precomputed: dict[str, np.ndarray] = {}
    for entry in raw_spaces:
        sname = str(_expect(entry, "name", "space"))
        where = f"space {sname!r}"
        kind = _parse_enum(SpaceKind, _expect(entry, "kind", where), where)
        ptype = _parse_enum(PayloadType, _expect(entry, "payloadType", where), where)

        payloads = None
        if "payloads" in entry and entry["payloads"] is not None:
            raw_payloads = entry["payloads"]
            if isinstance(raw_payloads, dict):
                pfile = base / str(_expect(raw_payloads, "file", f"{where} payloads"))
                if not pfile.is_file():
                    raise ManifestError("ManifestSyntax", f"{where}: payload file not found: {pfile}")
                try:
                    raw_payloads = json.loads(pfile.read_text())
                except json.JSONDecodeError as exc:
                    raise ManifestError("ManifestSyntax", f"{pfile}: {exc}") from exc
            if not isinstance(raw_payloads, list):
                raise ManifestError("ManifestSyntax", f"{where}: payloads must be an array")
            payloads = [
                parse_payload(v, ptype, f"{where} payload[{i}]")
                for i, v in enumerate(raw_payloads)
            ]
            if ptype is PayloadType.REGIONALIZATION:
                counts = {len(p) for p in payloads}
                if len(counts) > 1:
                    raise ManifestError(
                        "ManifestSyntax",
                        f"{where}: regionalizations cover differing location counts {sorted(counts)}",
                    )

        raw_distance = _expect(entry, "distance", where)
        dkind = str(_expect(raw_distance, "kind", f"{where} distance"))
        if dkind == "builtin":
            spec = DistanceSpec(kind="builtin", measure=str(_expect(raw_distance, "measure", where)))
        elif dkind == "precomputed":
            fname = str(_expect(raw_distance, "file", f"{where} distance"))
            fmt = str(raw_distance.get("format", "csv"))
            if fmt not in ("csv", "json"):
                raise ManifestError("ManifestSyntax", f"{where}: unknown matrix format {fmt!r}")
            mpath = base / fname
            if not mpath.is_file():
                raise ManifestError("ManifestSyntax", f"{where}: matrix file not found: {mpath}")
            try:
                if fmt == "csv":
                    values = np.loadtxt(mpath, delimiter=",", ndmin=2)
                else:
                    values = np.asarray(json.loads(mpath.read_text()), dtype=float)
            except (ValueError, json.JSONDecodeError) as exc:
                raise ManifestError("ManifestSyntax", f"{mpath}: {exc}") from exc
            precomputed[sname] = values
            spec = DistanceSpec(kind="precomputed", file=fname, format=fmt)
        else:
            raise ManifestError("ManifestSyntax", f"{where}: unknown distance kind {dkind!r}")
        spaces.append(Space(name=sname, kind=kind, payload_type=ptype, distance_spec=spec, payloads=payloads))

    return build_dataset(name, cases, spaces, precomputed)


def save_dataset(dataset: Dataset, out_dir: str | Path) -> Path:
    """Write a dataset back to manifest form; reloading reproduces its matrices.

    Payloads are inlined. Precomputed matrices are exported to JSON sidecars
    (floats round-trip exactly through repr), regardless of the format they
    were originally loaded from.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest: dict = {
        "name": dataset.name,
        "cases": [{"id": c.id, "label": c.label, "tags": c.tags} for c in dataset.cases],
        "spaces": [],
    }
    for space in dataset.spaces:
        entry: dict = {
            "name": space.name,
            "kind": space.kind.value,
            "payloadType": space.payload_type.value,
        }
        if space.payloads is not None:
            entry["payloads"] = [
                payload_to_json(p, space.payload_type) for p in space.payloads
            ]
        spec = space.distance_spec
        if spec.kind == "builtin":
            entry["distance"] = {"kind": "builtin", "measure": spec.measure}
        else:
            fname = f"{space.name}.distance.json"
            values = dataset.raw_distances[space.name].values
            (out / fname).write_text(
                json.dumps([[float(v) for v in row] for row in values]) + "\n"
            )
            entry["distance"] = {"kind": "precomputed", "file": fname, "format": "json"}
        manifest["spaces"].append(entry)
    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest_path
