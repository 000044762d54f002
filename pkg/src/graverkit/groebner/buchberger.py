"""Toric Gröbner bases in the vector encoding.

A binomial x^{u+} - x^{u-} of I_A is stored as the kernel vector u, oriented
so that u+ carries the leading monomial. Buchberger completion starts from
the Graver basis of A, which already generates I_A, so no saturation step is
needed; the result is then minimized and tail-reduced.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict

from ..errors import InfiniteFiberError, PreconditionError, ResourceLimitExceeded
from ..graver.completion import graver
from ..graver.models import GraverBasis
from ..linalg.matrix import IntMatrix, format_matrix
from ..linalg.vectors import (
    LatticeVector,
    canonical_order_key,
    is_zero,
    leq,
    negative_part,
    positive_part,
)
from ..utils.config import DEFAULT_LIMITS, Limits
from .order import TermOrder

logger = logging.getLogger(__name__)


class GroebnerBasis(BaseModel):
    """Minimal reduced Gröbner basis of I_A for one term order."""

    model_config = ConfigDict(frozen=True)

    matrix: IntMatrix
    order: TermOrder
    elements: tuple[LatticeVector, ...]
    reduced: bool = True
    minimal: bool = True

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_text(self) -> str:
        return format_matrix(self.elements, self.matrix.cols)


def require_pointed(basis: GraverBasis) -> None:
    """Raise InfiniteFiberError when ker(A) meets the nonnegative orthant.

    A nonnegative kernel vector decomposes conformally into Graver elements,
    so some Graver element is then nonnegative or nonpositive itself.
    """
    for g in basis.elements:
        if all(v >= 0 for v in g) or all(v <= 0 for v in g):
            raise InfiniteFiberError(f"ker(A) contains the sign-definite vector {g}; fibers are infinite")


def _lead_reduce(r: LatticeVector, basis: Sequence[LatticeVector], order: TermOrder) -> LatticeVector:
    """Reduce the leading term of r until no leading term of the basis divides it."""
    while not is_zero(r):
        lead = positive_part(r)
        for g in basis:
            if leq(positive_part(g), lead):
                r = tuple(a - b for a, b in zip(r, g, strict=True))
                break
        else:
            return r
        if not is_zero(r):
            r = order.orient(r)
    return r


def _buchberger(
    generators: list[LatticeVector], order: TermOrder, limits: Limits
) -> list[LatticeVector]:
    basis = list(generators)
    pairs = deque((i, j) for j in range(len(basis)) for i in range(j))
    processed = 0
    while pairs:
        i, j = pairs.popleft()
        u, v = basis[i], basis[j]
        # coprime leading terms: the S-binomial reduces to zero
        if not any(a > 0 and b > 0 for a, b in zip(u, v, strict=True)):
            continue
        s = tuple(a - b for a, b in zip(u, v, strict=True))
        processed += 1
        if is_zero(s):
            continue
        r = _lead_reduce(order.orient(s), basis, order)
        if is_zero(r):
            continue
        if len(basis) >= limits.max_elements:
            raise ResourceLimitExceeded("max_elements", limits.max_elements, "during Buchberger completion")
        k = len(basis)
        basis.append(r)
        pairs.extend((m, k) for m in range(k))
    logger.debug("buchberger: %d S-vectors reduced, %d generators", processed, len(basis))
    return basis


def _minimize(basis: list[LatticeVector]) -> list[LatticeVector]:
    """Drop elements whose leading term is divisible by another leading term."""
    ordered = sorted(set(basis), key=canonical_order_key)
    leads = [positive_part(g) for g in ordered]
    keep = []
    for k, g in enumerate(ordered):
        redundant = False
        for m, other in enumerate(leads):
            if m == k or not leq(other, leads[k]):
                continue
            # equal leading terms: keep the first in canonical order
            if other != leads[k] or m < k:
                redundant = True
                break
        if not redundant:
            keep.append(g)
    return keep


def _tail_reduce(basis: list[LatticeVector], order: TermOrder) -> list[LatticeVector]:
    """Reduce every trailing term by the leading terms of the other elements."""
    current = list(basis)
    for k in range(len(current)):
        g = current[k]
        changed = True
        while changed:
            changed = False
            tail = negative_part(g)
            for m, h in enumerate(current):
                if m != k and leq(positive_part(h), tail):
                    g = tuple(a + b for a, b in zip(g, h, strict=True))
                    changed = True
                    break
        current[k] = order.orient(g)
    return current


def groebner(
    matrix: IntMatrix,
    order: TermOrder,
    limits: Limits | None = None,
    graver_basis: GraverBasis | None = None,
) -> GroebnerBasis:
    """The minimal reduced Gröbner basis of I_A under order, canonically sorted."""
    if order.width != matrix.cols:
        raise PreconditionError(f"order on {order.width} variables for a matrix with {matrix.cols} columns")
    limits = limits or DEFAULT_LIMITS
    basis = graver_basis if graver_basis is not None else graver(matrix, limits)
    require_pointed(basis)
    generators = [order.orient(g) for g in basis.elements]
    completed = _buchberger(generators, order, limits)
    reduced = _tail_reduce(_minimize(completed), order)
    elements = tuple(sorted(reduced, key=canonical_order_key))
    logger.info("groebner: %d Graver pairs, %d Gröbner elements", basis.size, len(elements))
    return GroebnerBasis(matrix=matrix, order=order, elements=elements)


def normal_form(z: Sequence[int], gb: GroebnerBasis) -> LatticeVector:
    """The order-minimal point of the fiber of z, by repeated reduction."""
    if any(v < 0 for v in z):
        raise PreconditionError(f"normal form needs a nonnegative point, got {tuple(z)}")
    if len(z) != gb.matrix.cols:
        raise PreconditionError(f"point of length {len(z)} for {gb.matrix.cols} variables")
    current = tuple(z)
    leads = [(positive_part(g), g) for g in gb.elements]
    while True:
        for lead, g in leads:
            if leq(lead, current):
                current = tuple(a - b for a, b in zip(current, g, strict=True))
                break
        else:
            return current
