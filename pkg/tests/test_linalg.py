"""Tests for integer matrices, vectors and lattices."""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from graverkit.errors import MatrixFormatError, PreconditionError
from graverkit.families.matrices import ab_matrix, transportation_matrix
from graverkit.linalg.lattice import (
    hermite_normal_form,
    is_unimodular,
    kernel_lattice_basis,
    lattice_contains,
    lattice_equal,
    rank,
)
from graverkit.linalg.matrix import (
    IntMatrix,
    format_matrix,
    parse_matrix,
    parse_matrix_rows,
    parse_vector,
    read_matrix,
)
from graverkit.linalg.vectors import (
    canonical_sign,
    conformal_leq,
    is_sign_compatible,
    minimal_elements,
    negative_part,
    norm1,
    positive_part,
    sign_masks,
    support,
)

small_ints = st.integers(min_value=-3, max_value=3)


def matrices(rows: int, cols: int) -> st.SearchStrategy[IntMatrix]:
    return st.lists(
        st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(IntMatrix.from_rows)


class TestIntMatrix:
    """Construction and basic arithmetic."""

    def test_shape_and_columns(self) -> None:
        """Rows, columns and column access agree."""
        m = IntMatrix.from_rows([(1, 2, 3), (4, 5, 6)])
        assert m.shape == (2, 3)
        assert m.column(1) == (2, 5)
        assert IntMatrix.from_columns(m.columns()) == m
        assert m.transpose().shape == (3, 2)

    def test_apply(self) -> None:
        """Matrix-vector product and kernel membership."""
        m = ab_matrix(1, 2)
        assert m.apply((0, 2, 0, 0)) == (2, 2)
        assert m.annihilates((1, -1, -1, 1))
        assert not m.annihilates((1, -1, 0, 0))

    def test_rejects_ragged_rows(self) -> None:
        """Rows of different lengths are a validation error."""
        with pytest.raises(ValidationError):
            IntMatrix.from_rows([(1, 2), (3,)])

    def test_rejects_floats(self) -> None:
        """Entries must be exact integers."""
        with pytest.raises(ValidationError):
            IntMatrix(entries=((1.0, 2),))

    def test_arbitrary_precision(self) -> None:
        """Entries beyond 64 bits stay exact."""
        big = 10**30
        m = IntMatrix.from_rows([(big, 1)])
        assert m.apply((1, -big)) == (0,)


class TestMatrixText:
    """The `R C` header text format."""

    def test_parse_and_format(self) -> None:
        """Formatting then parsing gives the matrix back."""
        m = transportation_matrix(2, 2)
        assert parse_matrix(m.to_text()) == m
        assert m.to_text().splitlines()[0] == "4 4"

    def test_comments_and_blank_lines_ignored(self) -> None:
        """Lines starting with # and empty lines are skipped."""
        m = parse_matrix("# twisted cubic\n2 4\n\n1 1 1 1\n0 1 2 3\n")
        assert m == ab_matrix(1, 2)
        assert parse_matrix("2 4\n1 1 1 1\n  # second row\n0 1 2 3\n") == m
        assert "#" not in m.to_text()

    def test_zero_row_listing(self) -> None:
        """A listing may have no rows."""
        assert parse_matrix_rows("0 4\n") == ([], 4)
        assert format_matrix([], 4) == "0 4\n"

    def test_bad_token_reports_position(self) -> None:
        """A non-integer entry names its line and column."""
        with pytest.raises(MatrixFormatError) as info:
            parse_matrix("2 3\n1 2 3\n4 x 6\n")
        assert info.value.line == 3
        assert info.value.column == 2

    def test_wrong_row_length(self) -> None:
        """Rows must have exactly C entries."""
        with pytest.raises(MatrixFormatError) as info:
            parse_matrix("1 3\n1 2\n")
        assert info.value.line == 2

    def test_missing_rows(self) -> None:
        """The header row count is enforced."""
        with pytest.raises(MatrixFormatError):
            parse_matrix("3 2\n1 2\n")

    def test_vector_must_be_single_row(self) -> None:
        """parse_vector accepts exactly one row."""
        assert parse_vector("1 3\n1 -1 0\n") == (1, -1, 0)
        with pytest.raises(MatrixFormatError):
            parse_vector("2 1\n1\n2\n")

    def test_read_matrix_from_file(self, tmp_path: Path) -> None:
        """Files are read as text."""
        path = tmp_path / "a.mat"
        path.write_text("1 2\n3 4\n")
        assert read_matrix(path) == IntMatrix.from_rows([(3, 4)])


class TestVectors:
    """Derived quantities and the sign-compatible order."""

    def test_parts_and_support(self) -> None:
        """z = z+ - z- with disjoint supports."""
        z = (2, -1, 0, -3)
        assert positive_part(z) == (2, 0, 0, 0)
        assert negative_part(z) == (0, 1, 0, 3)
        assert support(z) == (0, 1, 3)
        assert norm1(z) == 6
        assert sign_masks(z) == (0b0001, 0b1010)

    def test_canonical_sign(self) -> None:
        """The first nonzero entry becomes positive."""
        assert canonical_sign((0, -1, 2)) == (0, 1, -2)
        assert canonical_sign((0, 1, -2)) == (0, 1, -2)
        assert canonical_sign((0, 0)) == (0, 0)

    def test_conformal_order(self) -> None:
        """Below means same orthant and no larger in absolute value."""
        assert conformal_leq((1, -1, 0), (2, -1, 0))
        assert not conformal_leq((1, -1, 0), (1, 0, -1))
        assert not conformal_leq((1, 0), (-1, 0))
        assert is_sign_compatible((1, 0, -2), (3, 5, -1))
        assert not is_sign_compatible((1, -1), (1, 1))

    def test_minimal_elements(self) -> None:
        """Non-minimal vectors and duplicates up to sign are dropped."""
        vectors = [(1, -1, 0), (2, -2, 0), (-1, 1, 0), (1, 0, -1), (0, 1, -1)]
        assert minimal_elements(vectors) == [(0, 1, -1), (1, -1, 0), (1, 0, -1)]

    @given(st.lists(small_ints, min_size=1, max_size=6))
    def test_canonical_sign_idempotent(self, z: list[int]) -> None:
        """Canonicalizing twice changes nothing."""
        once = canonical_sign(z)
        assert canonical_sign(once) == once
        assert canonical_sign([-v for v in z]) == once


class TestLattice:
    """Kernels, Hermite normal forms and lattice equality."""

    def test_hermite_normal_form(self) -> None:
        """Redundant generators of 2Z x 3Z reduce to the diagonal basis."""
        assert hermite_normal_form([(4, -3), (2, 0), (0, 3)], 2) == [(2, 0), (0, 3)]
        assert hermite_normal_form([(0, 0, 0)], 3) == []

    def test_kernel_of_identity_is_trivial(self) -> None:
        """Full column rank leaves nothing."""
        assert kernel_lattice_basis(IntMatrix.identity(2)) == []

    def test_kernel_of_zero_matrix(self) -> None:
        """The zero map has all of Z^3 as kernel."""
        basis = kernel_lattice_basis(IntMatrix.zeros(1, 3))
        assert len(basis) == 3
        assert lattice_equal(basis, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_twisted_cubic_kernel(self, twisted_cubic: IntMatrix) -> None:
        """v and h generate ker_Z(A_(1,2))."""
        basis = kernel_lattice_basis(twisted_cubic)
        assert len(basis) == 2
        assert lattice_equal(basis, [(-2, 3, 0, -1), (1, -1, -1, 1)])

    def test_lattice_equal_cases(self) -> None:
        """Negation spans the same lattice; a scaled vector does not."""
        assert lattice_equal([(1, -1)], [(-1, 1)])
        assert not lattice_equal([(2, 0)], [(1, 0)])

    def test_lattice_equal_length_mismatch(self) -> None:
        """Vectors of different lengths are rejected."""
        with pytest.raises(PreconditionError):
            lattice_equal([(1, 0)], [(1, 0, 0)])

    def test_lattice_contains(self) -> None:
        """Membership in a generated lattice."""
        assert lattice_contains([(2, 0), (0, 3)], (4, -3))
        assert not lattice_contains([(2, 0), (0, 3)], (1, 0))

    def test_rank(self) -> None:
        """The 3x3 transportation matrix has rank 5."""
        assert rank(transportation_matrix(3, 3)) == 5

    def test_unimodular(self) -> None:
        """Transportation matrices are unimodular; the twisted cubic is not."""
        assert is_unimodular(transportation_matrix(3, 3))
        assert is_unimodular(transportation_matrix(4, 3))
        assert not is_unimodular(ab_matrix(1, 2))

    @given(matrices(2, 4))
    def test_kernel_basis_annihilated(self, m: IntMatrix) -> None:
        """Every returned basis vector lies in the kernel and the count is the nullity."""
        basis = kernel_lattice_basis(m)
        assert all(m.annihilates(v) for v in basis)
        assert len(basis) == m.cols - rank(m)

    @given(
        st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=2, max_size=4),
        st.integers(min_value=-3, max_value=3),
    )
    def test_lattice_equal_under_basis_change(self, vectors: list[list[int]], k: int) -> None:
        """Adding a multiple of one generator to another keeps the lattice."""
        changed = [list(v) for v in vectors]
        changed[0] = [a + k * b for a, b in zip(vectors[0], vectors[1], strict=True)]
        assert lattice_equal(vectors, changed)
        assert lattice_equal(changed, vectors)
        assert hermite_normal_form(vectors, 3) == hermite_normal_form(changed, 3)

    @given(st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=1, max_size=4))
    def test_hermite_normal_form_idempotent(self, vectors: list[list[int]]) -> None:
        """The HNF of an HNF is itself."""
        once = hermite_normal_form(vectors, 3)
        assert hermite_normal_form(once, 3) == once

    @given(
        st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=2, max_size=4),
        st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=1, max_size=4),
        st.integers(min_value=-3, max_value=3),
    )
    def test_lattice_equal_reflexive_and_transitive(
        self, first: list[list[int]], other: list[list[int]], k: int
    ) -> None:
        """Equality is reflexive, and chains of equal lattices stay equal."""
        assert lattice_equal(first, first)
        second = [list(v) for v in first]
        second[1] = [a + k * b for a, b in zip(first[1], first[0], strict=True)]
        third = [[-c for c in v] for v in reversed(second)]
        assert lattice_equal(first, second)
        assert lattice_equal(second, third)
        assert lattice_equal(first, third)
        if lattice_equal(first, other) and lattice_equal(other, third):
            assert lattice_equal(first, third)
        assert lattice_equal(first, other) == lattice_equal(third, other)
