"""Tests for fiber enumeration, edge certificates and U(A) membership."""

from __future__ import annotations

from fractions import Fraction

import pytest

from graverkit.errors import InfiniteFiberError, PreconditionError, ResourceLimitExceeded
from graverkit.fibers import (
    EdgeCertificate,
    complement_indicator,
    edge_test,
    fiber_enumerate,
    layer_certificates,
    positive_row_weight,
    primitive_functional,
    ugb_member,
    verify_inequality_certificate,
)
from graverkit.families.matrices import ab_matrix, transportation_matrix
from graverkit.graver import graver
from graverkit.linalg.matrix import IntMatrix
from graverkit.linalg.vectors import negative_part, positive_part
from graverkit.utils.config import Limits

SIMPLEX = IntMatrix.from_rows([(1, 1, 1)])


class TestFiberEnumeration:
    """Nonnegative solutions of Ay = b."""

    def test_twisted_cubic_fiber(self, twisted_cubic: IntMatrix) -> None:
        """The fiber of (2, 2) holds y^2 and xz."""
        fiber = fiber_enumerate(twisted_cubic, (2, 2))
        assert fiber.points == ((0, 2, 0, 0), (1, 0, 1, 0))
        assert (1, 0, 1, 0) in fiber

    def test_simplex_fiber_size(self) -> None:
        """Compositions of 2 into three parts."""
        fiber = fiber_enumerate(SIMPLEX, (2,))
        assert fiber.size == 6
        assert fiber.points == tuple(sorted(fiber.points))

    def test_empty_fiber(self, twisted_cubic: IntMatrix) -> None:
        """(1, 5) is not reachable with one column."""
        assert fiber_enumerate(twisted_cubic, (1, 5)).size == 0

    def test_positive_row_weight(self, twisted_cubic: IntMatrix) -> None:
        """The weight is a strictly positive combination of the rows."""
        y, w = positive_row_weight(twisted_cubic)
        assert all(v >= 1 for v in w)
        assert w == tuple(sum(a * b for a, b in zip(y, col, strict=True)) for col in twisted_cubic.columns())

    def test_infinite_fiber(self) -> None:
        """No positive weight exists for (1 -1)."""
        with pytest.raises(InfiniteFiberError):
            positive_row_weight(IntMatrix.from_rows([(1, -1)]))
        with pytest.raises(InfiniteFiberError):
            fiber_enumerate(IntMatrix.from_rows([(1, -1)]), (0,))

    def test_fiber_cap(self) -> None:
        """Too many points names the max_fiber cap."""
        with pytest.raises(ResourceLimitExceeded) as info:
            fiber_enumerate(SIMPLEX, (2,), Limits(max_fiber=3))
        assert info.value.cap == "max_fiber"

    def test_rhs_length(self, twisted_cubic: IntMatrix) -> None:
        """One entry per row."""
        with pytest.raises(PreconditionError):
            fiber_enumerate(twisted_cubic, (1,))


class TestEdges:
    """Edge certificates and universal Gröbner basis membership."""

    def test_edge_of_simplex(self) -> None:
        """(1,-1,0) joins two vertices of the standard simplex."""
        result = ugb_member(SIMPLEX, (1, -1, 0))
        assert result
        assert result.fiber_size == 3
        assert result.certificate is not None
        assert set(result.certificate.tight_set) == {(1, 0, 0), (0, 1, 0)}

    def test_not_an_edge(self) -> None:
        """(2,0,0) to (0,1,1) cuts through the face of 2 times the simplex."""
        result = ugb_member(SIMPLEX, (2, -1, -1))
        assert not result
        assert result.certificate is None
        assert result.fiber_size == 6

    def test_twisted_cubic_quadric(self, twisted_cubic: IntMatrix) -> None:
        """y^2 - xz is a circuit of a two-point fiber."""
        assert ugb_member(twisted_cubic, (-1, 2, -1, 0))

    def test_membership_preconditions(self, twisted_cubic: IntMatrix) -> None:
        """Zero and non-kernel vectors are refused."""
        with pytest.raises(PreconditionError):
            ugb_member(twisted_cubic, (0, 0, 0, 0))
        with pytest.raises(PreconditionError):
            ugb_member(twisted_cubic, (1, -1, 0, 0))

    def test_endpoints_must_lie_in_fiber(self) -> None:
        """An edge test against the wrong fiber is refused."""
        fiber = fiber_enumerate(SIMPLEX, (2,))
        with pytest.raises(PreconditionError):
            edge_test(fiber, (1, -1, 0))

    def test_layer_certificates(self) -> None:
        """One result per generator, in order."""
        results = layer_certificates(SIMPLEX, [(1, -1, 0), (2, -1, -1)])
        assert [bool(r) for r in results] == [True, False]

    def test_complement_indicator_comes_first(self) -> None:
        """(-3,5,0,-2) in U(A_(2,3)) is certified by y_3 >= 0."""
        assert complement_indicator((-3, 5, 0, -2)) == (0, 0, 1, 0)
        result = ugb_member(ab_matrix(2, 3), (-3, 5, 0, -2))
        assert result.certificate is not None
        assert result.certificate.functional == (0, 0, 1, 0)

    def test_candidates_before_lp(self) -> None:
        """A valid candidate is returned as given; an invalid one is passed over."""
        fiber = fiber_enumerate(SIMPLEX, (1,))
        cert = edge_test(fiber, (1, -1, 0), [(0, 0, 5)])
        assert cert is not None
        assert cert.functional == (0, 0, 5)
        cert = edge_test(fiber, (1, -1, 0), [(1, 0, 0)])
        assert cert is not None
        assert cert.functional == (0, 0, 1)

    def test_full_support_uses_lp(self) -> None:
        """(2,-4,1,1) has no zero entry; the LP finds a certificate tight on its two parts."""
        a = ab_matrix(2, 3)
        z = (2, -4, 1, 1)
        result = ugb_member(a, z)
        assert result.certificate is not None
        fiber = fiber_enumerate(a, a.apply(positive_part(z)))
        assert verify_inequality_certificate(
            fiber, result.certificate.functional, (positive_part(z), negative_part(z))
        )

    def test_graver_of_3x3_tables_is_universal(self) -> None:
        """Every element of G(A_3x3) carries an edge certificate, so U(A_3x3) = G(A_3x3)."""
        a = transportation_matrix(3, 3)
        basis = graver(a)
        assert basis.size == 15
        for g in basis.elements:
            result = ugb_member(a, g)
            assert result.certificate is not None
            fiber = fiber_enumerate(a, a.apply(positive_part(g)))
            assert verify_inequality_certificate(
                fiber, result.certificate.functional, (positive_part(g), negative_part(g))
            )


class TestCertificates:
    """Checking a given functional against a fiber."""

    def test_verify_inequality_certificate(self) -> None:
        """Only the functional tight on exactly the pair passes."""
        fiber = fiber_enumerate(SIMPLEX, (1,))
        pair = ((1, 0, 0), (0, 1, 0))
        assert verify_inequality_certificate(fiber, (0, 0, 1), pair)
        assert not verify_inequality_certificate(fiber, (0, 0, 0), pair)
        assert not verify_inequality_certificate(fiber, (1, 0, 0), pair)
        assert not verify_inequality_certificate(fiber, (0, 1), pair)

    def test_primitive_functional(self) -> None:
        """Scaled to coprime integers, sign kept."""
        assert primitive_functional((Fraction(1, 2), Fraction(-1, 3))) == (3, -2)
        assert primitive_functional((Fraction(4), Fraction(6))) == (2, 3)
        assert primitive_functional((Fraction(0), Fraction(0))) == (0, 0)

    def test_integral(self) -> None:
        """Integer view only when every entry is integral."""
        cert = EdgeCertificate(functional=(2, 0), value=0, tight_set=())
        assert cert.integral() == (2, 0)
        half = EdgeCertificate(functional=(Fraction(1, 2), 0), value=0, tight_set=())
        assert half.integral() is None
