"""Higher Lawrence liftings and the layered witness file format."""

from __future__ import annotations

import logging

from ..errors import MatrixFormatError, PreconditionError
from ..linalg.matrix import IntMatrix, format_matrix, parse_matrix_rows
from .models import LawrenceLift, LayeredVector

logger = logging.getLogger(__name__)


def lawrence_lift(base: IntMatrix, copies: int) -> LawrenceLift:
    """A^(N) of shape (n + dN) x nN.

    The first n rows hold N side-by-side identity blocks, so a kernel vector
    has layers summing to zero; below them A repeats on the block diagonal,
    so each layer lies in ker(A).
    """
    if copies < 1:
        raise PreconditionError(f"number of copies must be >= 1, got {copies}")
    d, n = base.shape
    width = n * copies
    rows: list[tuple[int, ...]] = []
    for i in range(n):
        rows.append(tuple(int(j % n == i) for j in range(width)))
    for block in range(copies):
        for r in base.entries:
            row = [0] * width
            row[block * n : (block + 1) * n] = r
            rows.append(tuple(row))
    logger.debug("lifted %dx%d matrix %d times: %dx%d", d, n, copies, len(rows), width)
    return LawrenceLift(base=base, copies=copies, matrix=IntMatrix.from_rows(rows))


def type_of(x: LayeredVector) -> int:
    return x.type


def in_lifted_kernel(lift: LawrenceLift, x: LayeredVector) -> bool:
    """Layers sum to zero and each one lies in ker(A)."""
    if x.width != lift.width or x.copies != lift.copies:
        raise PreconditionError(
            f"{x.copies} layers of width {x.width} against a lift of {lift.copies} x {lift.width}"
        )
    return lift.matrix.annihilates(x.flat)


def format_layered(x: LayeredVector) -> str:
    """Matrix text with one layer per row, then the line ``layers N width n``."""
    return format_matrix(x.layers, x.width) + f"layers {x.copies} width {x.width}\n"


def parse_layered(text: str) -> LayeredVector:
    rows, width = parse_matrix_rows(_strip_sidecar(text))
    sidecar = _sidecar(text)
    if sidecar is not None:
        copies, declared = sidecar
        if copies != len(rows) or declared != width:
            raise MatrixFormatError(
                f"sidecar says {copies} layers of width {declared}, body has {len(rows)} of width {width}"
            )
    return LayeredVector(width=width, layers=tuple(rows))


def _sidecar(text: str) -> tuple[int, int] | None:
    for line in reversed(text.splitlines()):
        parts = line.split()
        if not parts:
            continue
        if parts[0] != "layers":
            return None
        if len(parts) != 4 or parts[2] != "width":
            raise MatrixFormatError(f"malformed sidecar line {line.strip()!r}")
        try:
            return int(parts[1]), int(parts[3])
        except ValueError as e:
            raise MatrixFormatError(f"malformed sidecar line {line.strip()!r}") from e
    return None


def _strip_sidecar(text: str) -> str:
    # line numbers must not shift
    return "\n".join(
        "#" + line if line.lstrip().startswith("layers") else line for line in text.splitlines()
    )
