"""Checking a claimed Graver basis without recomputing it.

A finite symmetric set G that generates ker_Z(A) is the Graver basis as soon
as every sum g1 + g2 of two members is a sign-compatible nonnegative integer
combination of members (each summand ⊑ g1 + g2). The checker decides that
last condition by exhaustive search.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from ..errors import PreconditionError
from ..linalg.lattice import kernel_lattice_basis, lattice_equal
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import LatticeVector, canonical_sign, conformal_leq, is_zero, negate, vec
from .models import CertificateResult

logger = logging.getLogger(__name__)


class _Representer:
    """Memoized search: is s a sum of members each ⊑ s?"""

    def __init__(self, members: Sequence[LatticeVector]) -> None:
        self.members = members
        self.memo: dict[LatticeVector, bool] = {}

    def __call__(self, rest: LatticeVector) -> bool:
        # after subtracting some h ⊑ s the remainder is still ⊑ s
        if is_zero(rest):
            return True
        cached = self.memo.get(rest)
        if cached is not None:
            return cached
        found = False
        for h in self.members:
            if conformal_leq(h, rest):
                if self(tuple(a - b for a, b in zip(rest, h, strict=True))):
                    found = True
                    break
        self.memo[rest] = found
        return found


def graver_certificate_check(matrix: IntMatrix, candidate: Iterable[Sequence[int]]) -> CertificateResult:
    """Decide whether candidate is the Graver basis of matrix.

    Criteria in order: "kernel" (nonzero members of ker A), "symmetric",
    "generates" (lattice equality with ker_Z A) and "representable". The
    first failing criterion is returned with its witness.
    """
    members = list(dict.fromkeys(vec(g) for g in candidate))
    if not members:
        raise PreconditionError("graver certificate check needs a nonempty candidate set")

    for g in members:
        if len(g) != matrix.cols:
            raise PreconditionError(f"candidate of length {len(g)} for {matrix.cols} columns")
        if is_zero(g) or not matrix.annihilates(g):
            return CertificateResult(
                ok=False, criterion="kernel", witness=g, detail="not a nonzero kernel element"
            )

    present = set(members)
    for g in members:
        if negate(g) not in present:
            return CertificateResult(
                ok=False, criterion="symmetric", witness=g, detail="negation missing"
            )

    if not lattice_equal(members, kernel_lattice_basis(matrix)):
        return CertificateResult(
            ok=False, criterion="generates", detail="candidate spans a proper sublattice of ker_Z(A)"
        )

    represent = _Representer(members)
    checked: set[LatticeVector] = set()
    for i, g1 in enumerate(members):
        for g2 in members[i:]:
            s = tuple(a + b for a, b in zip(g1, g2, strict=True))
            key = canonical_sign(s)
            if is_zero(s) or key in checked:
                continue
            checked.add(key)
            if not represent(s):
                logger.debug("sum %s of %s and %s is not representable", s, g1, g2)
                return CertificateResult(
                    ok=False,
                    criterion="representable",
                    pair=(g1, g2),
                    witness=s,
                    detail="sum is not a sign-compatible combination of members",
                )
    logger.debug("certificate check passed: %d members, %d sums", len(members), len(checked))
    return CertificateResult(ok=True)
