"""Edge certificates for fibers and universal Gröbner basis membership.

A kernel vector z lies in U(A) iff the segment [z+, z-] is an edge of the
convex hull of the fiber of Az+. That holds iff some functional c is equal
on both endpoints and strictly larger on every other fiber point; for a
finite point set strictness can be replaced by a margin of 1.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from ..errors import PreconditionError
from ..linalg.matrix import IntMatrix
from ..linalg.simplex import LinearSystem, find_feasible_point
from ..linalg.vectors import LatticeVector, dot, is_zero, negative_part, positive_part
from ..utils.config import Limits
from .enumeration import fiber_enumerate
from .models import EdgeCertificate, Fiber, UGBMembership

logger = logging.getLogger(__name__)


def primitive_functional(c: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Positive multiple of c with coprime integer entries; zero stays zero."""
    if all(x == 0 for x in c):
        return tuple(Fraction(0) for _ in c)
    scale = math.lcm(*(x.denominator for x in c))
    ints = [int(x * scale) for x in c]
    g = math.gcd(*ints)
    return tuple(Fraction(v // g) for v in ints)


def certificate_for(fiber: Fiber, functional: Sequence[int | Fraction]) -> EdgeCertificate:
    """Evaluate a functional on the fiber: minimum value and where it is attained."""
    values = [(dot(functional, y), y) for y in fiber.points]
    gamma = min(v for v, _ in values)
    tight = tuple(y for v, y in values if v == gamma)
    return EdgeCertificate(functional=tuple(functional), value=gamma, tight_set=tight)


def complement_indicator(z: Sequence[int]) -> tuple[Fraction, ...]:
    """Ones outside the support of z, zeros on it."""
    return tuple(Fraction(int(v == 0)) for v in z)


def edge_test(
    fiber: Fiber, z: Sequence[int], candidates: Sequence[Sequence[int | Fraction]] = ()
) -> EdgeCertificate | None:
    """Certificate that conv{z+, z-} is an edge of conv(fiber), or None.

    The given candidates and then the complement-of-support indicator are
    tried before the LP; the first functional tight exactly on the two
    endpoints is returned unchanged.
    """
    if is_zero(z):
        raise PreconditionError("edge test needs a nonzero vector")
    top, bottom = positive_part(z), negative_part(z)
    for end in (top, bottom):
        if end not in fiber:
            raise PreconditionError(f"{end} is not a point of the fiber of {fiber.rhs}")
    for functional in (*candidates, complement_indicator(z)):
        if verify_inequality_certificate(fiber, functional, (top, bottom)):
            return certificate_for(fiber, functional)
    n = fiber.matrix.cols
    system = LinearSystem(n)
    system.add_equality(tuple(a - b for a, b in zip(top, bottom, strict=True)), 0)
    others = [y for y in fiber.points if y != top and y != bottom]
    for y in others:
        system.add_inequality(tuple(a - b for a, b in zip(y, top, strict=True)), 1)
    point = find_feasible_point(system)
    if point is None:
        logger.debug("segment %s is not an edge of a %d-point fiber", tuple(z), fiber.size)
        return None
    return certificate_for(fiber, primitive_functional(point))


def ugb_member(
    matrix: IntMatrix,
    z: Sequence[int],
    limits: Limits | None = None,
    candidates: Sequence[Sequence[int | Fraction]] = (),
) -> UGBMembership:
    """Decide z in U(A) by enumerating the fiber of Az+ and testing the edge."""
    vector = tuple(int(v) for v in z)
    if is_zero(vector):
        raise PreconditionError("the zero vector is never in U(A)")
    if not matrix.annihilates(vector):
        raise PreconditionError(f"{vector} is not in ker(A)")
    fiber = fiber_enumerate(matrix, matrix.apply(positive_part(vector)), limits)
    cert = edge_test(fiber, vector, candidates)
    return UGBMembership(vector=vector, member=cert is not None, certificate=cert, fiber_size=fiber.size)


def verify_inequality_certificate(
    fiber: Fiber, functional: Sequence[int | Fraction], expected_tight: tuple[Sequence[int], Sequence[int]]
) -> bool:
    """True iff c.y >= c.p on the fiber with equality exactly on the expected pair."""
    if len(functional) != fiber.matrix.cols:
        return False
    first, second = (tuple(p) for p in expected_tight)
    if first not in fiber or second not in fiber:
        return False
    cert = certificate_for(fiber, functional)
    if dot(functional, first) != cert.value:
        return False
    return set(cert.tight_set) == {first, second}


def layer_certificates(
    matrix: IntMatrix, generators: Sequence[LatticeVector], limits: Limits | None = None
) -> list[UGBMembership]:
    """ugb_member for each generator, in order."""
    return [ugb_member(matrix, g, limits) for g in generators]
