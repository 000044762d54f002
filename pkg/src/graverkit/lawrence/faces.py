"""Exact minimization of a linear functional over a lifted fiber.

Points of the fiber of A^(N) at b are N layer points z^i, each in the fiber
of A at its own block of b, whose sum is the top block t of b. A dynamic
program over the layers keyed by the partial layer sum finds the minimum and
counts the minimizers without enumerating the product of the layer fibers.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from ..errors import PreconditionError, ResourceLimitExceeded
from ..fibers.enumeration import fiber_enumerate, positive_row_weight
from ..linalg.vectors import LatticeVector, dot
from ..utils.config import DEFAULT_LIMITS, Limits
from .models import FaceMinimizers, LawrenceLift

logger = logging.getLogger(__name__)

State = tuple[int, ...]


class _Cell:
    """Best cost into a state, number of optimal paths, optimal predecessors."""

    __slots__ = ("cost", "count", "parents")

    def __init__(self, cost: Fraction, count: int, parents: list[tuple[State, LatticeVector]]) -> None:
        self.cost = cost
        self.count = count
        self.parents = parents


def lifted_face_minimizers(
    lift: LawrenceLift,
    b: Sequence[int],
    functional: Sequence[int | Fraction],
    cap: int = 16,
    limits: Limits | None = None,
) -> FaceMinimizers:
    """Minimum of c.x over {x >= 0 : A^(N) x = b}, the number of minimizers and up to cap of them."""
    limits = limits or DEFAULT_LIMITS
    base = lift.base
    n, copies = base.cols, lift.copies
    rhs = tuple(int(v) for v in b)
    if len(rhs) != lift.matrix.rows:
        raise PreconditionError(f"right-hand side of length {len(rhs)} for {lift.matrix.rows} rows")
    if len(functional) != n * copies:
        raise PreconditionError(f"functional of length {len(functional)} for {n * copies} variables")
    top = rhs[:n]
    weight = positive_row_weight(base)
    layer_points: dict[tuple[int, ...], list[LatticeVector]] = {}

    layers: list[dict[State, _Cell]] = [{(0,) * n: _Cell(Fraction(0), 1, [])}]
    for i in range(copies):
        block = lift.layer_rhs(rhs, i)
        points = layer_points.get(block)
        if points is None:
            fiber = fiber_enumerate(base, block, limits, weight=weight)
            # a layer point can never exceed the total
            points = [p for p in fiber.points if all(a <= t for a, t in zip(p, top, strict=True))]
            layer_points[block] = points
        c = functional[i * n : (i + 1) * n]
        costs = [Fraction(dot(c, p)) for p in points]
        following: dict[State, _Cell] = {}
        for state, cell in layers[-1].items():
            for p, cost in zip(points, costs, strict=True):
                nxt = tuple(s + a for s, a in zip(state, p, strict=True))
                if any(v > t for v, t in zip(nxt, top, strict=True)):
                    continue
                total = cell.cost + cost
                target = following.get(nxt)
                if target is None:
                    following[nxt] = _Cell(total, cell.count, [(state, p)])
                    if len(following) > limits.max_states:
                        raise ResourceLimitExceeded("max_states", limits.max_states, f"layer {i + 1}")
                elif total < target.cost:
                    target.cost, target.count, target.parents = total, cell.count, [(state, p)]
                elif total == target.cost:
                    target.count += cell.count
                    target.parents.append((state, p))
        logger.info("layer %d/%d: %d points, %d states", i + 1, copies, len(points), len(following))
        layers.append(following)

    states = sum(len(layer) for layer in layers)
    final = layers[-1].get(top)
    if final is None:
        return FaceMinimizers(min_value=None, count=0, states=states)
    minimizers = _reconstruct(layers, top, cap)
    return FaceMinimizers(min_value=final.cost, count=final.count, minimizers=minimizers, states=states)


def _reconstruct(layers: list[dict[State, _Cell]], top: State, cap: int) -> tuple[LatticeVector, ...]:
    """Up to cap optimal layer sequences, flattened, in discovery order."""
    found: list[LatticeVector] = []

    def walk(depth: int, state: State, suffix: list[LatticeVector]) -> None:
        if len(found) >= cap:
            return
        if depth == 0:
            found.append(tuple(v for layer in reversed(suffix) for v in layer))
            return
        for prev, point in layers[depth][state].parents:
            suffix.append(point)
            walk(depth - 1, prev, suffix)
            suffix.pop()
            if len(found) >= cap:
                return

    walk(len(layers) - 1, top, [])
    return tuple(found)
