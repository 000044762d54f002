"""Integer lattices: Hermite normal form, kernels, lattice equality, unimodularity."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form as _hnf

from ..errors import PreconditionError
from .matrix import IntMatrix
from .vectors import LatticeVector

logger = logging.getLogger(__name__)


def _domain_matrix(rows: Sequence[Sequence[int]], width: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(rows), width), ZZ)


def _columns(matrix: DomainMatrix) -> list[LatticeVector]:
    return [tuple(int(v) for v in col) for col in matrix.transpose().to_list()]


def hermite_normal_form(vectors: Sequence[Sequence[int]], width: int) -> list[LatticeVector]:
    """Canonical basis of the lattice the vectors span.

    The vectors become the columns of a matrix whose column HNF is taken; its
    nonzero columns are returned. Two generating sets span the same lattice
    iff their HNFs are identical.
    """
    for v in vectors:
        if len(v) != width:
            raise PreconditionError(f"vector of length {len(v)} in a lattice of Z^{width}")
    nonzero = [v for v in vectors if any(v)]
    if not nonzero:
        return []
    by_columns = [[v[i] for v in nonzero] for i in range(width)]
    return _columns(_hnf(_domain_matrix(by_columns, len(nonzero))))


def rank(matrix: IntMatrix) -> int:
    return int(_domain_matrix(matrix.entries, matrix.cols).to_field().rank())


def kernel_lattice_basis(matrix: IntMatrix) -> list[LatticeVector]:
    """Canonical basis of ker_Z(A) = {z in Z^n : Az = 0}.

    The columns of (I_n over A) span {(z, Az)}. In its column HNF every column
    is zero below its pivot, so the columns whose pivot sits in the identity
    block vanish on the A block and form a basis of the kernel. The result is
    returned in Hermite normal form so equal lattices give identical output.
    """
    d, n = matrix.shape
    stacked = [[int(i == j) for j in range(n)] for i in range(n)] + [list(r) for r in matrix.entries]
    hnf = _columns(_hnf(_domain_matrix(stacked, n)))
    basis = [col[:n] for col in hnf if not any(col[n:])]
    logger.debug("kernel of %dx%d matrix: nullity %d", d, n, len(basis))
    return hermite_normal_form(basis, n)


def lattice_equal(first: Sequence[Sequence[int]], second: Sequence[Sequence[int]]) -> bool:
    """True iff the two generating sets span the same sublattice of Z^n."""
    lengths = {len(v) for v in first} | {len(v) for v in second}
    if len(lengths) > 1:
        raise PreconditionError(f"vectors of different lengths: {sorted(lengths)}")
    if not lengths:
        return True
    width = lengths.pop()
    return hermite_normal_form(first, width) == hermite_normal_form(second, width)


def lattice_contains(generators: Sequence[Sequence[int]], z: Sequence[int]) -> bool:
    width = len(z)
    return hermite_normal_form(list(generators), width) == hermite_normal_form(
        [*generators, z], width
    )


def is_unimodular(matrix: IntMatrix) -> bool:
    """True iff all nonzero r x r minors of a rank-r matrix share one absolute value.

    The rows of two full-rank r-subsets differ by an invertible transform, so
    the minors over the second subset are a fixed multiple of those over the
    first. The first subset is scanned in full, every later one needs a single
    nonzero minor.
    """
    r = rank(matrix)
    if r == 0:
        raise PreconditionError("unimodularity needs a matrix of rank >= 1")
    m = sympy.Matrix(matrix.entries)
    all_cols = list(range(matrix.cols))
    seen: int | None = None
    for row_idx in combinations(range(matrix.rows), r):
        sub_rows = m.extract(list(row_idx), all_cols)
        if sub_rows.rank() < r:
            continue
        full_scan = seen is None
        for col_idx in combinations(all_cols, r):
            minor = abs(int(sub_rows.extract(list(range(r)), list(col_idx)).det(method="bareiss")))
            if minor == 0:
                continue
            if seen is None:
                seen = minor
            elif minor != seen:
                logger.debug("minor %d on rows %s columns %s differs from %d", minor, row_idx, col_idx, seen)
                return False
            if not full_scan:
                break
    return True
