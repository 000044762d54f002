"""Complete enumeration of fibers {y in Z^n_{>=0} : Ay = b}.

Finiteness comes from a strictly positive row-space weight w = yA: every
fiber point satisfies w.z = y.b, which bounds each coordinate. The weight is
found by exact LP and scaled to integers, so the search itself is integer
arithmetic only.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from ..errors import InfiniteFiberError, PreconditionError, ResourceLimitExceeded
from ..linalg.matrix import IntMatrix
from ..linalg.simplex import LinearSystem, find_feasible_point
from ..linalg.vectors import LatticeVector
from ..utils.config import DEFAULT_LIMITS, Limits
from .models import Fiber

logger = logging.getLogger(__name__)


def positive_row_weight(matrix: IntMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Integer y with w = yA >= 1 componentwise; returns (y, w).

    Raises InfiniteFiberError when no such y exists, which by Farkas means
    ker(A) contains a nonzero nonnegative vector.
    """
    system = LinearSystem(matrix.rows)
    for col in matrix.columns():
        system.add_inequality(col, 1)
    point = find_feasible_point(system)
    if point is None:
        raise InfiniteFiberError("ker(A) meets the nonnegative orthant; fibers are infinite")
    scale = math.lcm(*(p.denominator for p in point))
    y = tuple(int(p * scale) for p in point)
    w = tuple(sum(a * b for a, b in zip(y, col, strict=True)) for col in matrix.columns())
    return y, w


def _variable_order(matrix: IntMatrix) -> list[int]:
    """Columns with the largest entries first, ties by index."""
    return sorted(range(matrix.cols), key=lambda j: (-max(abs(a) for a in matrix.column(j)), j))


def fiber_enumerate(
    matrix: IntMatrix,
    rhs: Sequence[int],
    limits: Limits | None = None,
    weight: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
) -> Fiber:
    """All nonnegative integer solutions of Ay = rhs, sorted lexicographically."""
    limits = limits or DEFAULT_LIMITS
    b = tuple(int(v) for v in rhs)
    if len(b) != matrix.rows:
        raise PreconditionError(f"right-hand side of length {len(b)} for {matrix.rows} rows")
    y, w = weight if weight is not None else positive_row_weight(matrix)
    order = _variable_order(matrix)
    n = matrix.cols
    columns = [matrix.column(j) for j in order]
    weights = [w[j] for j in order]

    # sign pattern of the columns still unassigned at each depth, per row
    can_rise = [[False] * matrix.rows for _ in range(n + 1)]
    can_fall = [[False] * matrix.rows for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        for i, a in enumerate(columns[k]):
            can_rise[k][i] = can_rise[k + 1][i] or a > 0
            can_fall[k][i] = can_fall[k + 1][i] or a < 0

    points: list[LatticeVector] = []
    current = [0] * n

    def feasible(k: int, residual: list[int]) -> bool:
        for i, r in enumerate(residual):
            if (r > 0 and not can_rise[k][i]) or (r < 0 and not can_fall[k][i]):
                return False
        return True

    def descend(k: int, residual: list[int], budget: int) -> None:
        if k == n:
            if not any(residual):
                point = [0] * n
                for pos, j in enumerate(order):
                    point[j] = current[pos]
                points.append(tuple(point))
                if len(points) > limits.max_fiber:
                    raise ResourceLimitExceeded("max_fiber", limits.max_fiber, f"rhs {b}")
            return
        if budget < 0 or not feasible(k, residual):
            return
        col = columns[k]
        wk = weights[k]
        for value in range(budget // wk + 1):
            current[k] = value
            descend(
                k + 1,
                [r - value * a for r, a in zip(residual, col, strict=True)],
                budget - value * wk,
            )
        current[k] = 0

    descend(0, list(b), sum(a * c for a, c in zip(y, b, strict=True)))
    points.sort()
    logger.debug("fiber of %s: %d points", b, len(points))
    return Fiber(matrix=matrix, rhs=b, points=tuple(points))
