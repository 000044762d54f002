"""Brute-force Graver oracle: orthant Hilbert bases inside a box."""

from __future__ import annotations

import logging

from ..errors import PreconditionError
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import LatticeVector, minimal_elements

logger = logging.getLogger(__name__)


def kernel_points_in_box(matrix: IntMatrix, box_bound: int) -> list[LatticeVector]:
    """All nonzero z with Az = 0 and every |z_i| <= box_bound.

    Depth-first over coordinates; a branch is cut when some row's partial
    sum can no longer be brought back to zero by the remaining coordinates.
    """
    n = matrix.cols
    rows = matrix.entries
    # reach[k][i]: largest |contribution| of coordinates k.. to row i
    reach = [[0] * matrix.rows for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        for i, row in enumerate(rows):
            reach[k][i] = reach[k + 1][i] + abs(row[k]) * box_bound
    columns = matrix.columns()
    points: list[LatticeVector] = []
    prefix = [0] * n

    def descend(k: int, partial: list[int]) -> None:
        if any(abs(p) > r for p, r in zip(partial, reach[k], strict=True)):
            return
        if k == n:
            if any(prefix):
                points.append(tuple(prefix))
            return
        col = columns[k]
        for value in range(-box_bound, box_bound + 1):
            prefix[k] = value
            descend(k + 1, [p + value * a for p, a in zip(partial, col, strict=True)])
        prefix[k] = 0

    descend(0, [0] * matrix.rows)
    return points


def orthant_hilbert_oracle(matrix: IntMatrix, box_bound: int) -> list[LatticeVector]:
    """G(A) restricted to the box ‖z‖_∞ <= box_bound, by exhaustive enumeration.

    Anything ⊑-below a box point lies in the box too, so minimality inside
    the box is global minimality. Returns canonical representatives, sorted.
    """
    if box_bound < 1:
        raise PreconditionError(f"box bound must be >= 1, got {box_bound}")
    points = kernel_points_in_box(matrix, box_bound)
    logger.debug("oracle: %d kernel points in box %d", len(points), box_bound)
    return minimal_elements(points)
