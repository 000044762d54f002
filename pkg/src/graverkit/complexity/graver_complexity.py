"""Graver complexity g(A) and certified lower bounds for u(A).

g(A) is the largest 1-norm in the Graver basis of the matrix whose columns
are the Graver elements of A, one per +/- pair. Which sign is taken for a
column does not matter, since flipping a column flips the corresponding
coordinate of every kernel vector.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..errors import PreconditionError
from ..fibers.edges import ugb_member
from ..lawrence.models import Relation
from ..lawrence.relations import relation_minimal
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import LatticeVector, negate, norm1
from ..state.cache import Cache, cached_graver
from ..utils.config import Limits
from .models import ComplexityReport

logger = logging.getLogger(__name__)


def derived_matrix(columns: Sequence[LatticeVector], flips: Sequence[bool] | None = None) -> IntMatrix:
    """Matrix with the given vectors as columns, optionally negating some."""
    if flips is not None and len(flips) != len(columns):
        raise PreconditionError(f"{len(flips)} sign flips for {len(columns)} columns")
    chosen = [negate(g) if flips is not None and flips[j] else g for j, g in enumerate(columns)]
    return IntMatrix.from_columns(chosen)


def graver_complexity(
    matrix: IntMatrix,
    limits: Limits | None = None,
    cache: Cache | None = None,
    flips: Sequence[bool] | None = None,
) -> ComplexityReport:
    """Two-stage Graver computation of g(A)."""
    first = cached_graver(matrix, limits, cache)
    if first.size == 0:
        return ComplexityReport(
            matrix=matrix, graver_size=0, derived_matrix=None, derived_graver_size=0, g_value=0, witness=None
        )
    derived = derived_matrix(first.elements, flips)
    logger.info("complexity: derived matrix is %dx%d", derived.rows, derived.cols)
    second = cached_graver(derived, limits, cache)
    witness: LatticeVector | None = None
    best = 0
    for g in second.elements:
        size = norm1(g)
        if size > best:
            best, witness = size, g
    return ComplexityReport(
        matrix=matrix,
        graver_size=first.size,
        derived_matrix=derived,
        derived_graver_size=second.size,
        g_value=best,
        witness=witness,
    )


def groebner_complexity_lower_bound(
    matrix: IntMatrix, relations: Sequence[Relation], limits: Limits | None = None
) -> int:
    """max sum(lambda) over relations whose generators all lie in U(A) and that are minimal.

    Each such relation gives an element of U(A^(s)) of type s = sum(lambda),
    so the maximum is a lower bound for u(A).
    """
    if not relations:
        raise PreconditionError("need at least one relation")
    checked: dict[LatticeVector, bool] = {}
    best = 0
    for k, rel in enumerate(relations):
        for g, m in zip(rel.generators, rel.multiplicities, strict=True):
            if m == 0:
                continue
            if g not in checked:
                checked[g] = ugb_member(matrix, g, limits).member
            if not checked[g]:
                raise PreconditionError(f"relation {k}: generator {g} is not in U(A)")
        result = relation_minimal(rel)
        if not result.minimal:
            raise PreconditionError(f"relation {k} is not minimal, sub-relation {result.witness}")
        best = max(best, rel.norm)
    return best
