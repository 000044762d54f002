"""Named matrix families."""

from __future__ import annotations

from ..errors import PreconditionError
from ..linalg.matrix import IntMatrix


def transportation_matrix(rows: int, cols: int) -> IntMatrix:
    """Row-sum and column-sum constraints of rows x cols tables.

    Variables are the table entries in row-major order; the first `rows`
    constraints are row sums, the remaining `cols` are column sums.
    """
    if rows < 1 or cols < 1:
        raise PreconditionError(f"table shape must be positive, got {rows}x{cols}")
    width = rows * cols
    out = [tuple(int(k // cols == i) for k in range(width)) for i in range(rows)]
    out += [tuple(int(k % cols == j) for k in range(width)) for j in range(cols)]
    return IntMatrix.from_rows(out)


def ab_matrix(a: int, b: int) -> IntMatrix:
    """A_{a,b} = (1 1 1 1; 0 a b a+b)."""
    return IntMatrix.from_rows([(1, 1, 1, 1), (0, a, b, a + b)])


def a_n_matrix(n: int) -> IntMatrix:
    """A_n = (1 ... 1 0; 1 2 ... n 1), the partition identity matrix."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    return IntMatrix.from_rows([(1,) * n + (0,), tuple(range(1, n + 1)) + (1,)])


def staircase_matrix(k: int) -> IntMatrix:
    """(1 1 ... 1 0; 0 1 2 ... k 1) with k + 2 columns."""
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    return IntMatrix.from_rows([(1,) * (k + 1) + (0,), tuple(range(k + 1)) + (1,)])
