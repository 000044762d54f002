"""Tests for the A_(a,b) family."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from graverkit.families import (
    ABInstance,
    ab_graver_closed_form,
    ab_lifted_witness,
    ab_relation,
    ab_solution_chain,
    ab_ugb_triple,
    b_matrix,
    closed_form_sequence,
)
from graverkit.families.matrices import ab_matrix, staircase_matrix
from graverkit.graver import GraverBasis, graver, graver_certificate_check
from graverkit.lawrence import relation_minimal
from graverkit.linalg.vectors import negative_part, positive_part

PAIRS = [(1, 2), (1, 3), (2, 3), (3, 4), (2, 4)]


class TestInstance:
    """Parameters and normalization."""

    def test_requires_a_below_b(self) -> None:
        """a < b and both positive."""
        with pytest.raises(ValidationError):
            ABInstance(a=2, b=2)
        with pytest.raises(ValidationError):
            ABInstance(a=3, b=2)
        with pytest.raises(ValidationError):
            ABInstance(a=0, b=2)

    def test_normalization(self) -> None:
        """(2, 4) works with the coprime pair (1, 2)."""
        inst = ABInstance(a=2, b=4)
        assert inst.gcd == 2
        assert (inst.a_norm, inst.b_norm) == (1, 2)
        assert not inst.normalized
        assert inst.complexity == 6
        assert inst.matrix == ab_matrix(2, 4)
        assert inst.normalized_matrix == ab_matrix(1, 2)
        assert inst.v == (-2, 3, 0, -1)

    def test_label(self) -> None:
        """Labels keep the raw parameters."""
        assert ABInstance(a=2, b=4).label() == "A_(2,4)"


class TestClosedForm:
    """G(A_(a,b)) = +/-{v, v+h, ..., v+(a'+b')h, h}."""

    def test_sequence(self) -> None:
        """v, then a'+b' steps of h, then h."""
        seq = closed_form_sequence(ABInstance(a=1, b=2))
        assert seq == [(-2, 3, 0, -1), (-1, 2, -1, 0), (0, 1, -2, 1), (1, 0, -3, 2), (1, -1, -1, 1)]

    @pytest.mark.parametrize(("a", "b"), PAIRS)
    def test_matches_completion(self, a: int, b: int) -> None:
        """The formula agrees with a full Graver computation."""
        inst = ABInstance(a=a, b=b)
        assert ab_graver_closed_form(inst).elements == graver(inst.matrix).elements

    def test_certificate_accepts_closed_form(self) -> None:
        """The checker accepts the formula for (2, 3)."""
        inst = ABInstance(a=2, b=3)
        assert graver_certificate_check(inst.matrix, ab_graver_closed_form(inst).symmetric)

    def test_certificate_rejects_without_h(self) -> None:
        """Dropping h leaves a set the checker refuses."""
        inst = ABInstance(a=1, b=2)
        closed = ab_graver_closed_form(inst)
        kept = tuple(g for g in closed.elements if g != inst.h)
        without_h = GraverBasis(matrix=closed.matrix, elements=kept)
        result = graver_certificate_check(inst.matrix, without_h.symmetric)
        assert not result
        assert result.criterion in ("generates", "representable")

    def test_b_matrix(self) -> None:
        """G_(a,b) = (v h) B_(a'+b') with equal kernels."""
        report = b_matrix(ABInstance(a=2, b=3))
        assert report.b_matrix == staircase_matrix(5)
        assert report.g_matrix.shape == (4, 7)
        assert report.kernels_equal
        assert report.factorization_holds


class TestUGBTriple:
    """The three universal Gröbner basis members and their relation."""

    @pytest.mark.parametrize(("a", "b"), [(1, 2), (2, 3), (2, 4)])
    def test_certificates_hold(self, a: int, b: int) -> None:
        """Each hand-written functional is tight exactly on the segment ends."""
        triple = ab_ugb_triple(ABInstance(a=a, b=b), strict=True)
        assert [w.name for w in triple] == ["u", "v", "w"]
        assert all(w.certificate_valid and w.lp_member for w in triple)
        assert all(w.ok for w in triple)

    @pytest.mark.parametrize(("a", "b"), [(1, 2), (2, 3), (3, 4), (2, 5), (3, 5), (4, 7), (4, 6)])
    def test_solution_chain(self, a: int, b: int) -> None:
        """The fiber of u is its solution chain plus u-, and the chain ends at u+."""
        inst = ABInstance(a=a, b=b)
        chain = ab_solution_chain(inst)
        a_n, b_n = inst.a_norm, inst.b_norm
        assert len(chain) == a_n
        assert chain[0] == (b_n - a_n, a_n - 1, a_n, 0)
        assert chain[-1] == (b_n - 1, 0, 1, a_n - 1)
        matrix = inst.normalized_matrix
        u = (b_n - 1, -a_n - b_n + 1, 1, a_n - 1)
        assert all(matrix.apply(p) == matrix.apply(positive_part(u)) for p in chain)
        assert all(p[0] + p[2] == b_n for p in chain)
        member = ab_ugb_triple(inst, strict=True)[0]
        assert member.chain == tuple(chain)
        assert member.chain_valid
        assert set(member.fiber) == {*chain, negative_part(u)}

    def test_solution_chain_at_2_3(self) -> None:
        """(1,1,2,0) then (2,0,1,1)."""
        assert ab_solution_chain(ABInstance(a=2, b=3)) == [(1, 1, 2, 0), (2, 0, 1, 1)]

    def test_twisted_cubic_vectors(self) -> None:
        """u, v, w for A_(1,2)."""
        triple = ab_ugb_triple(ABInstance(a=1, b=2))
        assert [w.vector for w in triple] == [(1, -2, 1, 0), (-2, 3, 0, -1), (1, 0, -3, 2)]
        assert triple[1].fiber == ((0, 3, 0, 0), (1, 1, 1, 0), (2, 0, 0, 1))

    def test_relation(self) -> None:
        """(a'+b') u + (a'+b'-1) v + w = 0, minimal."""
        rel = ab_relation(ABInstance(a=1, b=2))
        assert rel.multiplicities == (3, 2, 1)
        assert rel.total() == (0, 0, 0, 0)
        assert relation_minimal(rel)
        assert ab_relation(ABInstance(a=2, b=3)).multiplicities == (5, 4, 1)

    def test_lifted_witness(self) -> None:
        """Exactly the witness's two parts minimize the concatenated functional."""
        witness, face = ab_lifted_witness(ABInstance(a=1, b=2))
        assert witness.copies == 6
        assert witness.type == 6
        assert face.count == 2
        flat = witness.flat
        top = tuple(max(v, 0) for v in flat)
        bottom = tuple(max(-v, 0) for v in flat)
        assert set(face.minimizers) == {top, bottom}
