"""Reading and writing exact matrices.

Two hand-authorable formats:

* JSON: an array of arrays; each entry is an integer or a string "p/q".
* CSV: one row per line; each cell is an integer or p/q.

Entries are parsed strictly (no floats, no scientific notation), and parse
errors name the offending row and column.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path

from .matrix import ExactMatrix

_ENTRY_RE = re.compile(r"[+-]?\d+(/\d+)?$")


class MatrixFormatError(ValueError):
    """A matrix file or document that does not satisfy the format."""


def parse_scalar(text: str) -> Fraction:
    """Parse an integer or 'p/q' string; anything else is rejected."""
    value = text.strip()
    if not _ENTRY_RE.fullmatch(value):
        raise MatrixFormatError(f"not an integer or p/q value: {text!r}")
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    """Render a scalar the way the CLI prints it: '-15' or '3/4'."""
    return str(value)


def scalar_to_obj(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else str(value)


def matrix_to_obj(A: ExactMatrix) -> list[list[int | str]]:
    return [[scalar_to_obj(e) for e in row] for row in A.rows]


def matrix_to_json(A: ExactMatrix) -> str:
    return json.dumps(matrix_to_obj(A))


def matrix_from_obj(obj) -> ExactMatrix:
    """Build a matrix from decoded JSON (list of lists of int or 'p/q')."""
    if not isinstance(obj, list) or not obj:
        raise MatrixFormatError("document must be a non-empty array of rows")
    rows = []
    for i, row in enumerate(obj, start=1):
        if not isinstance(row, list):
            raise MatrixFormatError(f"row {i} is not an array")
        rows.append([_entry_from_obj(e, i, j) for j, e in enumerate(row, start=1)])
    return _to_square_matrix(rows)


def _entry_from_obj(e, i: int, j: int) -> Fraction:
    if isinstance(e, bool):
        raise MatrixFormatError(f"row {i}, column {j}: booleans are not matrix entries")
    if isinstance(e, int):
        return Fraction(e)
    if isinstance(e, str):
        try:
            return parse_scalar(e)
        except MatrixFormatError as exc:
            raise MatrixFormatError(f"row {i}, column {j}: {exc}") from None
    raise MatrixFormatError(f"row {i}, column {j}: entries must be integers or 'p/q' strings, got {e!r}")


def parse_matrix_json(text: str) -> ExactMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    return matrix_from_obj(obj)


def parse_matrix_csv(text: str) -> ExactMatrix:
    rows = []
    for i, cells in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not cells:
            continue
        row = []
        for j, cell in enumerate(cells, start=1):
            try:
                row.append(parse_scalar(cell))
            except MatrixFormatError as exc:
                raise MatrixFormatError(f"row {i}, column {j}: {exc}") from None
        rows.append(row)
    if not rows:
        raise MatrixFormatError("no rows found")
    return _to_square_matrix(rows)


def _to_square_matrix(rows: list[list[Fraction]]) -> ExactMatrix:
    try:
        return ExactMatrix(rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None


def load_matrix(path: str | Path, fmt: str | None = None) -> ExactMatrix:
    """Load a matrix file, picking the format from the extension.

    ``fmt`` ("json" or "csv") overrides the auto-detection.
    """
    path = Path(path)
    if fmt is None:
        suffix = path.suffix.lower()
        if suffix == ".json":
            fmt = "json"
        elif suffix == ".csv":
            fmt = "csv"
        else:
            raise MatrixFormatError(
                f"cannot infer format from {path.name!r}; pass --format json or csv"
            )
    if fmt not in ("json", "csv"):
        raise MatrixFormatError(f"unknown format {fmt!r}; expected json or csv")
    text = path.read_text(encoding="utf-8")
    return parse_matrix_json(text) if fmt == "json" else parse_matrix_csv(text)
