"""Integer lattice vectors and the sign-compatible order.

Vectors are plain tuples of Python ints. The helpers below compute the
derived quantities used everywhere else: positive and negative parts,
support, 1-norm, sign masks and the canonical sign.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

LatticeVector = tuple[int, ...]


def vec(values: Iterable[int]) -> LatticeVector:
    """Build a lattice vector from any iterable of integers."""
    return tuple(int(v) for v in values)


def positive_part(z: Sequence[int]) -> LatticeVector:
    return tuple(v if v > 0 else 0 for v in z)


def negative_part(z: Sequence[int]) -> LatticeVector:
    return tuple(-v if v < 0 else 0 for v in z)


def support(z: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, v in enumerate(z) if v != 0)


def norm1(z: Sequence[int]) -> int:
    return sum(abs(v) for v in z)


def norm_inf(z: Sequence[int]) -> int:
    return max((abs(v) for v in z), default=0)


def is_zero(z: Sequence[int]) -> bool:
    return all(v == 0 for v in z)


def negate(z: Sequence[int]) -> LatticeVector:
    return tuple(-v for v in z)


def add(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(k: int, z: Sequence[int]) -> LatticeVector:
    return tuple(k * v for v in z)


def dot(u: Sequence[int | Fraction], v: Sequence[int | Fraction]) -> int | Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), 0)


def sign_masks(z: Sequence[int]) -> tuple[int, int]:
    """Bitmasks of the positive and the negative coordinates."""
    pos = 0
    neg = 0
    for i, v in enumerate(z):
        if v > 0:
            pos |= 1 << i
        elif v < 0:
            neg |= 1 << i
    return pos, neg


def canonical_sign(z: Sequence[int]) -> LatticeVector:
    """Return z or -z, whichever has a positive first nonzero entry."""
    for v in z:
        if v > 0:
            return tuple(z)
        if v < 0:
            return negate(z)
    return tuple(z)


def is_sign_compatible(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff u and v lie in a common orthant."""
    return all(a * b >= 0 for a, b in zip(u, v, strict=True))


def conformal_leq(small: Sequence[int], big: Sequence[int]) -> bool:
    """The sign-compatible partial order: small is below big."""
    for a, b in zip(small, big, strict=True):
        if a == 0:
            continue
        if a > 0:
            if b < a:
                return False
        elif b > a:
            return False
    return True


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise u <= v."""
    return all(a <= b for a, b in zip(u, v, strict=True))


def canonical_order_key(z: Sequence[int]) -> tuple[int, LatticeVector]:
    """Sort key used for every canonically ordered vector list."""
    return norm1(z), tuple(z)


def minimal_elements(vectors: Iterable[Sequence[int]]) -> list[LatticeVector]:
    """Keep the nonzero vectors that have no other vector of the set below them.

    The set is read symmetrically: -v counts as a member whenever v does.
    Returns one canonical representative per +/- pair, canonically sorted.
    """
    reps = sorted({canonical_sign(v) for v in vectors if not is_zero(v)}, key=canonical_order_key)
    symmetric = [(r, sign_masks(r)) for r in reps]
    symmetric += [(negate(r), (m[1], m[0])) for r, m in symmetric]
    result = []
    for z in reps:
        zp, zn = sign_masks(z)
        size = norm1(z)
        reducible = False
        for g, (gp, gn) in symmetric:
            if gp & ~zp or gn & ~zn:
                continue
            if g == z or norm1(g) >= size:
                continue
            if conformal_leq(g, z):
                reducible = True
                break
        if not reducible:
            result.append(z)
    return result
