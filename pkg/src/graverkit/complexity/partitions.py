"""Primitive partition identities and the 2(n-1) norm bound for A_n.

A kernel vector x of A_n = (1 ... 1 0; 1 2 ... n 1) with x_{n+1} >= 0 is
the identity sum a_i + l * 1 = sum b_i in which part t occurs x_t times on
the left when x_t > 0, -x_t times on the right when x_t < 0, and l = x_{n+1}.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..errors import PreconditionError
from ..families.matrices import a_n_matrix, staircase_matrix
from ..linalg.lattice import kernel_lattice_basis, lattice_equal
from ..linalg.vectors import LatticeVector, conformal_leq, is_zero, negate, norm1
from ..state.cache import Cache, cached_graver
from ..utils.config import Limits
from .models import BoundReport, PartitionIdentity, TwoCReport

logger = logging.getLogger(__name__)


def _has_proper_kernel_part(x: LatticeVector, n: int) -> bool:
    """Some y with y ⊑ x, y not in {0, x} and A_n y = 0."""
    width = len(x)
    part = [0] * width

    def descend(i: int, count: int, weight: int) -> bool:
        if i == width:
            y = tuple(part)
            return count == 0 and weight == 0 and not is_zero(y) and y != x
        step = 1 if x[i] >= 0 else -1
        for mag in range(abs(x[i]) + 1):
            v = step * mag
            part[i] = v
            if i < n:
                found = descend(i + 1, count + v, weight + (i + 1) * v)
            else:
                found = descend(i + 1, count, weight + v)
            if found:
                part[i] = 0
                return True
        part[i] = 0
        return False

    return descend(0, 0, 0)


def ppi_from_kernel(x: Sequence[int], n: int) -> PartitionIdentity:
    """Translate x in ker(A_n), x_{n+1} >= 0, into its partition identity."""
    vector = tuple(int(v) for v in x)
    if len(vector) != n + 1:
        raise PreconditionError(f"vector of length {len(vector)} for A_{n} with {n + 1} columns")
    if not a_n_matrix(n).annihilates(vector):
        raise PreconditionError(f"{vector} is not in ker(A_{n})")
    if vector[n] < 0:
        raise PreconditionError(f"last coordinate of {vector} is negative; negate first")
    left: list[int] = []
    right: list[int] = []
    for t in range(1, n + 1):
        count = vector[t - 1]
        if count > 0:
            left.extend([t] * count)
        elif count < 0:
            right.extend([t] * -count)
    return PartitionIdentity(
        left=tuple(left),
        ones=vector[n],
        right=tuple(right),
        primitive=not is_zero(vector) and not _has_proper_kernel_part(vector, n),
    )


def kernel_from_ppi(identity: PartitionIdentity, n: int) -> LatticeVector:
    """Inverse of ppi_from_kernel: count the parts."""
    x = [0] * (n + 1)
    for a in identity.left:
        if not 1 <= a <= n:
            raise PreconditionError(f"part {a} outside 1..{n}")
        x[a - 1] += 1
    for b in identity.right:
        if not 1 <= b <= n:
            raise PreconditionError(f"part {b} outside 1..{n}")
        x[b - 1] -= 1
    x[n] = identity.ones
    return tuple(x)


def oriented_for_ppi(g: LatticeVector) -> LatticeVector:
    """The sign of g whose last coordinate is nonnegative."""
    return negate(g) if g[-1] < 0 else g


def tight_witness(n: int) -> LatticeVector:
    """e_1 - (n-1) e_{n-1} + (n-2) e_n, of 1-norm 2(n-1)."""
    if n < 3:
        raise PreconditionError(f"the tight witness needs n >= 3, got {n}")
    x = [0] * (n + 1)
    x[0] += 1
    x[n - 2] -= n - 1
    x[n - 1] += n - 2
    return tuple(x)


def ppi_verify_bound(n: int, limits: Limits | None = None, cache: Cache | None = None) -> BoundReport:
    """Max Graver 1-norm of A_n against 2(n-1), plus k + l <= D+ + D- <= n - 1 per element.

    summand_bound_holds covers the left inequality alone. The first identity
    breaking either one is kept as delta_counterexample; 1 + (n-1) * 1 = n
    breaks the right one for every n.
    """
    if n < 2:
        raise PreconditionError(f"n must be >= 2, got {n}")
    basis = cached_graver(a_n_matrix(n), limits, cache)
    identities = tuple(ppi_from_kernel(oriented_for_ppi(g), n) for g in basis.elements)
    summands_ok = all(p.k + p.ones <= p.delta_plus() + p.delta_minus() for p in identities)
    counterexample = next(
        (p for p in identities if not p.k + p.ones <= p.delta_plus() + p.delta_minus() <= n - 1), None
    )
    tight = n >= 3 and tight_witness(n) in basis
    report = BoundReport(
        n=n,
        max_norm=basis.max_norm,
        expected=2 * (n - 1),
        holds=basis.max_norm == 2 * (n - 1),
        tight_present=tight,
        delta_bound_holds=counterexample is None,
        summand_bound_holds=summands_ok,
        delta_counterexample=counterexample,
        identities=identities,
    )
    logger.info("A_%d: %d Graver pairs, max norm %d", n, basis.size, report.max_norm)
    return report


def primitive_identities(
    n: int, limits: Limits | None = None, cache: Cache | None = None
) -> list[PartitionIdentity]:
    """All primitive identities over parts 1..n, from G(A_n), by norm then parts."""
    basis = cached_graver(a_n_matrix(n), limits, cache)
    out = [ppi_from_kernel(oriented_for_ppi(g), n) for g in basis.elements]
    return sorted(out, key=lambda p: (p.norm, p.left, p.ones, p.right))


def verify_2c(c: int, limits: Limits | None = None, cache: Cache | None = None) -> TwoCReport:
    """Max Graver 1-norm of (1 ... 1 0; 0 1 ... c 1) and kernel equality with A_{c+1}."""
    if c < 1:
        raise PreconditionError(f"c must be >= 1, got {c}")
    shifted = staircase_matrix(c)
    equal = lattice_equal(kernel_lattice_basis(shifted), kernel_lattice_basis(a_n_matrix(c + 1)))
    basis = cached_graver(shifted, limits, cache)
    return TwoCReport(c=c, max_norm=max((norm1(g) for g in basis.elements), default=0), kernels_equal=equal)
