"""Textual form of BitMatrix: a "rows cols" header, then one 0/1 line per row."""

from pathlib import Path

from ..utils.errors import InstanceFormatError
from .models import BitMatrix


def format_matrix(m: BitMatrix) -> str:
    """Encode a matrix in the textual form."""
    lines = [f"{m.n_rows} {m.n_cols}", *m.to_strings()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BitMatrix:
    """Decode the textual form.

    Raises:
        InstanceFormatError: On a malformed header, row count or row width.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise InstanceFormatError("Empty matrix text", line=1)
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise InstanceFormatError(f"Bad matrix header {lines[0]!r}", line=1)
    n_rows, n_cols = int(header[0]), int(header[1])
    rows = lines[1:]
    if len(rows) != n_rows:
        raise InstanceFormatError(f"Expected {n_rows} rows, found {len(rows)}")
    for k, row in enumerate(rows, start=2):
        if len(row) != n_cols or any(c not in "01" for c in row):
            raise InstanceFormatError(f"Row {row!r} is not {n_cols} bits", line=k)
    if n_rows == 0:
        return BitMatrix.zeros(0, n_cols)
    return BitMatrix.from_strings(rows)


def read_matrix(path: str | Path) -> BitMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(m: BitMatrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(m), encoding="utf-8")
