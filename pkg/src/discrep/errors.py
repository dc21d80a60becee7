"""Error types shared across the engine."""

from __future__ import annotations

from dataclasses import dataclass


class ManifestError(Exception):
    """A dataset manifest or one of its referenced files is invalid.

    ``code`` is a stable identifier (``ManifestSyntax``, ``SizeMismatch``,
    ``AsymmetricMatrix``, ``NegativeDistance``, ``NonZeroDiagonal``,
    ``NonFiniteDistance``, ``IncompatibleMeasure``) suitable for machine
    handling; the message carries the human-readable detail.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class MeasureError(ValueError):
    """Two payloads cannot be compared (ShapeMismatch, UnitMismatch, GridMismatch)."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class NormalizationMismatch(ValueError):
    """An index was requested across matrices with different normalization modes."""


@dataclass(frozen=True)
class Violation:
    """One broken distance-matrix invariant, pointing at the first offending cell."""

    code: str
    cell: tuple[int, int]

    def __str__(self) -> str:
        return f"{self.code}@({self.cell[0]},{self.cell[1]})"
