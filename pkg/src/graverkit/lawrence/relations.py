"""Minimal nonnegative relations and the layered witnesses built from them.

A minimal relation sum lambda_i g_i = 0 over elements g_i of U(A) yields a
vector of the lifting A^(s), s = sum lambda_i, whose layers are lambda_1
copies of g_1, lambda_2 copies of g_2 and so on. Concatenating the edge
functionals of the g_i in the same arrangement certifies that vector as an
edge direction of its lifted fiber.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from ..errors import PreconditionError
from ..fibers.models import EdgeCertificate
from ..linalg.vectors import is_zero
from .models import LayeredVector, MinimalityResult, Relation

logger = logging.getLogger(__name__)


def _require_zero_sum(rel: Relation) -> None:
    total = rel.total()
    if not is_zero(total):
        raise PreconditionError(f"relation sums to {total}, not zero")


def relation_minimal(rel: Relation) -> MinimalityResult:
    """Search all 0 <= mu <= lambda for a proper sub-relation.

    Coordinates are cut as soon as the partial sum can no longer return to
    zero within the range the remaining generators can still add.
    """
    _require_zero_sum(rel)
    k, n = len(rel.generators), rel.width
    lam = rel.multiplicities
    low = [[0] * n for _ in range(k + 1)]
    high = [[0] * n for _ in range(k + 1)]
    for i in range(k - 1, -1, -1):
        g = rel.generators[i]
        for c in range(n):
            low[i][c] = low[i + 1][c] + lam[i] * min(0, g[c])
            high[i][c] = high[i + 1][c] + lam[i] * max(0, g[c])

    mu = [0] * k
    visited = 0

    def descend(i: int, partial: list[int]) -> tuple[int, ...] | None:
        nonlocal visited
        for c in range(n):
            if partial[c] + low[i][c] > 0 or partial[c] + high[i][c] < 0:
                return None
        if i == k:
            visited += 1
            candidate = tuple(mu)
            if any(candidate) and candidate != lam and not any(partial):
                return candidate
            return None
        g = rel.generators[i]
        for m in range(lam[i] + 1):
            mu[i] = m
            found = descend(i + 1, [p + m * v for p, v in zip(partial, g, strict=True)])
            if found is not None:
                return found
        mu[i] = 0
        return None

    witness = descend(0, [0] * n)
    logger.debug("relation %s: %d zero-sum candidates visited", lam, visited)
    return MinimalityResult(minimal=witness is None, witness=witness, candidates=visited)


def search_space(rel: Relation) -> int:
    """Number of candidate sub-relations, prod (lambda_i + 1)."""
    size = 1
    for m in rel.multiplicities:
        size *= m + 1
    return size


def build_witness(rel: Relation) -> LayeredVector:
    """lambda_1 layers g_1, then lambda_2 layers g_2, and so on."""
    result = relation_minimal(rel)
    if not result.minimal:
        raise PreconditionError(f"relation is not minimal, sub-relation {result.witness}")
    layers = tuple(g for g, m in zip(rel.generators, rel.multiplicities, strict=True) for _ in range(m))
    return LayeredVector(width=rel.width, layers=layers)


def lemma_certificate(
    rel: Relation, certificates: Sequence[EdgeCertificate | None]
) -> tuple[Fraction, ...]:
    """Concatenate each generator's edge functional lambda_i times, in witness order."""
    if len(certificates) != len(rel.generators):
        raise PreconditionError(
            f"{len(certificates)} certificates for {len(rel.generators)} generators"
        )
    functional: list[Fraction] = []
    for i, (cert, m) in enumerate(zip(certificates, rel.multiplicities, strict=True)):
        if m == 0:
            continue
        if cert is None:
            raise PreconditionError(f"generator {i} has no edge certificate")
        if len(cert.functional) != rel.width:
            raise PreconditionError(f"certificate {i} has length {len(cert.functional)}")
        functional.extend(list(cert.functional) * m)
    return tuple(functional)
