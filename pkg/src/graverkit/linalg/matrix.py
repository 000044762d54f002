"""Dense arbitrary-precision integer matrices and the matrix text format.

The text format is the one used by lattice software: a header line
``R C`` followed by R lines of C whitespace-separated base-10 integers.
The parser also skips empty lines and lines starting with ``#``, anywhere
in the input; the formatter never writes either.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator

from ..errors import MatrixFormatError
from .vectors import LatticeVector


class IntMatrix(BaseModel):
    """Immutable dense integer matrix, row-major."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, ...], ...]

    @field_validator("entries", mode="before")
    @classmethod
    def coerce_rows(cls, v: Any) -> tuple[tuple[int, ...], ...]:
        """Accept any nested sequence of integers; reject floats outright."""
        rows = []
        for row in v:
            cells = []
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise ValueError(f"matrix entries must be integers, got {x!r}")
                cells.append(int(x))
            rows.append(tuple(cells))
        return tuple(rows)

    @field_validator("entries")
    @classmethod
    def check_shape(cls, v: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if not v or not v[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(v[0])
        for i, row in enumerate(v):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} entries, expected {width}")
        return v

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> IntMatrix:
        return cls(entries=tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntMatrix:
        """Matrix whose j-th column is columns[j]."""
        if not columns:
            raise ValueError("need at least one column")
        height = len(columns[0])
        return cls(entries=tuple(tuple(col[i] for col in columns) for i in range(height)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(entries=tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(entries=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> LatticeVector:
        return self.entries[i]

    def column(self, j: int) -> LatticeVector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[LatticeVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(entries=tuple(zip(*self.entries, strict=True)))

    def apply(self, z: Sequence[int]) -> LatticeVector:
        """Matrix-vector product A*z."""
        if len(z) != self.cols:
            raise ValueError(f"vector of length {len(z)} for matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, z, strict=True)) for r in self.entries)

    def annihilates(self, z: Sequence[int]) -> bool:
        return all(v == 0 for v in self.apply(z))

    def select_columns(self, indices: Sequence[int]) -> IntMatrix:
        return IntMatrix(entries=tuple(tuple(r[j] for j in indices) for r in self.entries))

    def to_text(self) -> str:
        return format_matrix(self.entries, self.cols)

    def digest(self) -> str:
        """SHA-256 of the text form; stable cache key."""
        return hashlib.sha256(self.to_text().encode("ascii")).hexdigest()


def format_matrix(rows: Sequence[Sequence[int]], width: int) -> str:
    """Render rows in matrix text format; zero rows are allowed (``0 width``)."""
    lines = [f"{len(rows)} {width}"]
    for r in rows:
        if len(r) != width:
            raise ValueError(f"row of length {len(r)} in a {width}-column listing")
        lines.append(" ".join(str(v) for v in r))
    return "\n".join(lines) + "\n"


def parse_matrix_rows(text: str) -> tuple[list[LatticeVector], int]:
    """Parse matrix text into rows, allowing zero rows. Returns (rows, width)."""
    lines = [(n, line) for n, line in enumerate(text.splitlines(), start=1)]
    body = [(n, line) for n, line in lines if line.strip() and not line.lstrip().startswith("#")]
    if not body:
        raise MatrixFormatError("empty input, expected header 'R C'", line=1, column=1)
    header_no, header = body[0]
    parts = header.split()
    if len(parts) != 2:
        raise MatrixFormatError(
            f"header must be two integers 'R C', got {header.strip()!r}", line=header_no, column=1
        )
    try:
        nrows, ncols = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise MatrixFormatError(f"header is not numeric: {e}", line=header_no, column=1) from e
    if nrows < 0 or ncols < 1:
        raise MatrixFormatError(f"invalid dimensions {nrows} x {ncols}", line=header_no, column=1)

    data = body[1:]
    if len(data) != nrows:
        last = data[-1][0] if data else header_no
        raise MatrixFormatError(f"expected {nrows} rows, found {len(data)}", line=last, column=1)

    rows: list[LatticeVector] = []
    for n, line in data:
        tokens = line.split()
        if len(tokens) != ncols:
            raise MatrixFormatError(
                f"expected {ncols} entries, found {len(tokens)}", line=n, column=1
            )
        values = []
        for col, tok in enumerate(tokens, start=1):
            try:
                values.append(int(tok, 10))
            except ValueError as e:
                raise MatrixFormatError(f"not a base-10 integer: {tok!r}", line=n, column=col) from e
        rows.append(tuple(values))
    return rows, ncols


def parse_matrix(text: str) -> IntMatrix:
    rows, _ = parse_matrix_rows(text)
    if not rows:
        raise MatrixFormatError("matrix must have at least one row", line=1, column=1)
    return IntMatrix.from_rows(rows)


def parse_vector(text: str) -> LatticeVector:
    """Parse a ``1 n`` matrix file into a single vector."""
    rows, _ = parse_matrix_rows(text)
    if len(rows) != 1:
        raise MatrixFormatError(f"expected a single row vector, found {len(rows)} rows", line=1)
    return rows[0]


def read_matrix(path: Path) -> IntMatrix:
    return parse_matrix(path.read_text())


def read_vector(path: Path) -> LatticeVector:
    return parse_vector(path.read_text())
