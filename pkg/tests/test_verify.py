"""Tests for the shipped witness tables, the repair search and the claim harness."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from graverkit.errors import GraverkitError, PreconditionError
from graverkit.families.matrices import transportation_matrix
from graverkit.fibers.edges import certificate_for, ugb_member, verify_inequality_certificate
from graverkit.fibers.enumeration import fiber_enumerate
from graverkit.graver import graver
from graverkit.lawrence import (
    FaceMinimizers,
    Relation,
    lawrence_lift,
    lifted_face_minimizers,
    relation_minimal,
    search_space,
)
from graverkit.linalg.vectors import LatticeVector, is_zero, negative_part, positive_part
from graverkit.state.cache import Cache
from graverkit.utils.config import Limits
from graverkit.verify import (
    ClaimResult,
    ClaimStatus,
    TableWitness,
    VerificationReport,
    load_witnesses,
    repair_relation,
    stress,
    verify_paper,
)
from graverkit.verify import data as data_module

X7_REPLACEMENT = (-1, 0, 1, 0, 0, 0, 1, 0, -1)


@pytest.fixture(scope="module")
def witnesses() -> dict[str, TableWitness]:
    return load_witnesses()


def _lifted_face(witness: TableWitness, layers: Sequence[LatticeVector]) -> FaceMinimizers:
    """Minimize the layer-wise complement certificates over the lifted fiber of the layers."""
    matrix = witness.matrix
    functional: list[Fraction] = []
    for g in layers:
        fiber = fiber_enumerate(matrix, matrix.apply(positive_part(g)))
        functional.extend(certificate_for(fiber, witness.complement_functional(g)).functional)
    lift = lawrence_lift(matrix, len(layers))
    top = positive_part(tuple(v for g in layers for v in g))
    return lifted_face_minimizers(lift, lift.matrix.apply(top), functional, cap=4)


def _witness_layers(witness: TableWitness) -> list[LatticeVector]:
    rel = witness.relation()
    return [g for g, m in zip(rel.generators, rel.multiplicities, strict=True) for _ in range(m)]


def _claim(claim_id: str, status: ClaimStatus, detail: str = "") -> ClaimResult:
    return ClaimResult(
        claim_id=claim_id,
        section="ppi",
        location="G(A_3)",
        expected="4",
        computed="4 pairs",
        status=status,
        detail=detail,
    )


class TestWitnessData:
    """The transcribed layer tables."""

    def test_names_and_types(self, witnesses: dict[str, TableWitness]) -> None:
        """Five tables; each name states its type."""
        assert set(witnesses) == {"x6", "x7", "x8", "x9", "x27"}
        for name, w in witnesses.items():
            assert w.type == int(name[1:])

    def test_shapes(self, witnesses: dict[str, TableWitness]) -> None:
        """3x3 tables for the small witnesses, 3x4 for x27."""
        assert witnesses["x9"].matrix == transportation_matrix(3, 3)
        assert witnesses["x27"].matrix == transportation_matrix(3, 4)
        assert witnesses["x27"].section == "3x4"

    def test_x7_does_not_sum_to_zero(self, witnesses: dict[str, TableWitness]) -> None:
        """The printed fifth layer repeats the fourth."""
        rel = witnesses["x7"].relation()
        assert rel.total() == (6, 0, -6, 0, -3, 3, -6, 3, 3)

    @pytest.mark.parametrize("name", ["x6", "x8", "x9"])
    def test_small_witnesses_are_minimal(self, name: str, witnesses: dict[str, TableWitness]) -> None:
        """Zero-sum and without proper sub-relation."""
        rel = witnesses[name].relation()
        assert is_zero(rel.total())
        assert relation_minimal(rel)

    def test_x27(self, witnesses: dict[str, TableWitness]) -> None:
        """Multiplicities 1, 2, 3, 3, 5, 6, 7 and 32256 sub-relation candidates."""
        w = witnesses["x27"]
        assert tuple(sorted(w.multiplicities)) == (1, 2, 3, 3, 5, 6, 7)
        assert search_space(w.relation()) == 32256
        assert relation_minimal(w.relation())

    def test_x27_layers_have_edge_certificates(self, witnesses: dict[str, TableWitness]) -> None:
        """Every layer is in U(A_3x4), certified by its complement-of-support indicator."""
        w = witnesses["x27"]
        for g in dict.fromkeys(w.layers):
            assert ugb_member(w.matrix, g).member
            fiber = fiber_enumerate(w.matrix, w.matrix.apply(positive_part(g)))
            assert verify_inequality_certificate(
                fiber, w.complement_functional(g), (positive_part(g), negative_part(g))
            )

    def test_complement_functional(self, witnesses: dict[str, TableWitness]) -> None:
        """Ones exactly off the support."""
        layer = witnesses["x9"].layers[4]
        functional = witnesses["x9"].complement_functional(layer)
        assert functional == (0, 0, 1, 0, 0, 1, 1, 1, 1)

    def test_checksum_mismatch(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """A tampered file is refused."""
        real = data_module._read

        def tampered(name: str) -> bytes:
            raw = real(name)
            return raw + b" " if name == data_module.WITNESS_FILE else raw

        monkeypatch.setattr(data_module, "_read", tampered)
        with pytest.raises(GraverkitError):
            load_witnesses()
        assert load_witnesses(verify_checksum=False)

    def test_shape_validation(self) -> None:
        """Layers must match the table size and the multiplicity count."""
        with pytest.raises(ValidationError):
            TableWitness(
                name="x2",
                section="3x3",
                table_rows=3,
                table_cols=3,
                multiplicities=(1, 1),
                layers=((0,) * 9,),
            )
        with pytest.raises(ValidationError):
            TableWitness(
                name="x1",
                section="3x3",
                table_rows=3,
                table_cols=3,
                multiplicities=(1,),
                layers=((0,) * 4,),
            )


class TestRepair:
    """Single-layer corrections."""

    def test_x7(self, witnesses: dict[str, TableWitness]) -> None:
        """Only the fifth layer can be fixed, by the 2x2 move on the corners."""
        rel = witnesses["x7"].relation()
        repairs = repair_relation(rel, graver(transportation_matrix(3, 3)).elements)
        assert len(repairs) == 1
        fix = repairs[0]
        assert fix.layer == 4
        assert fix.replacement == X7_REPLACEMENT
        assert is_zero(fix.relation.total())
        assert fix.relation.norm == 7
        assert fix.describe().startswith("layer 5 ")

    def test_nothing_to_fix(self) -> None:
        """No candidate restores a hopeless relation."""
        rel = Relation(generators=((5, -5, 0, 0, 0, 0, 0, 0, 0),), multiplicities=(1,))
        assert repair_relation(rel, graver(transportation_matrix(3, 3)).elements) == []


class TestLiftedFace:
    """The concatenated certificate is minimized exactly at the two parts of the witness."""

    def test_x9(self, witnesses: dict[str, TableWitness]) -> None:
        """Two minimizers over the fiber of A^(9)."""
        layers = _witness_layers(witnesses["x9"])
        flat = tuple(v for g in layers for v in g)
        result = _lifted_face(witnesses["x9"], layers)
        assert result.count == 2
        assert set(result.minimizers) == {positive_part(flat), negative_part(flat)}

    @settings(max_examples=10)
    @given(st.permutations(range(6)))
    def test_layer_order_does_not_matter(
        self, order: list[int], witnesses: dict[str, TableWitness]
    ) -> None:
        """Permuting the layers of x6, certificates included, keeps two minimizers."""
        layers = _witness_layers(witnesses["x6"])
        assert len(layers) == 6
        permuted = [layers[i] for i in order]
        flat = tuple(v for g in permuted for v in g)
        result = _lifted_face(witnesses["x6"], permuted)
        assert result.count == 2
        assert set(result.minimizers) == {positive_part(flat), negative_part(flat)}

    @pytest.mark.slow
    def test_x27(self, witnesses: dict[str, TableWitness]) -> None:
        """Two minimizers over the fiber of A_3x4^(27)."""
        result = _lifted_face(witnesses["x27"], _witness_layers(witnesses["x27"]))
        assert result.count == 2


class TestReport:
    """Rendering and exit codes."""

    def test_exit_code(self) -> None:
        """Only FAIL fails the run."""
        claims = (_claim("a", ClaimStatus.PASS), _claim("b", ClaimStatus.NOTE), _claim("c", ClaimStatus.SKIP))
        passing = VerificationReport(claims=claims)
        assert passing.exit_code == 0
        failing = VerificationReport(claims=(_claim("a", ClaimStatus.FAIL),))
        assert failing.exit_code == 1
        assert [c.claim_id for c in failing.failed] == ["a"]

    def test_render(self) -> None:
        """Table, summary line, then NOTE and FAIL details."""
        report = VerificationReport(
            claims=(_claim("a", ClaimStatus.PASS), _claim("b", ClaimStatus.NOTE, "documented"))
        )
        text = report.render()
        lines = text.splitlines()
        assert lines[0].split() == ["claim", "where", "expected", "computed", "status"]
        assert "2 claims: 1 PASS, 1 NOTE" in lines
        assert lines[-1] == "NOTE b: documented"
        assert "seconds" in report.render(timings=True).splitlines()[0]

    def test_porcelain(self) -> None:
        """Spaces inside values become underscores."""
        report = VerificationReport(claims=(_claim("a", ClaimStatus.PASS),))
        assert report.porcelain() == "claim=a section=ppi status=PASS expected=4 computed=4_pairs\n"


class TestHarness:
    """Running sections."""

    def test_ppi_section(self, cache: Cache) -> None:
        """n = 2 and c = 1 are notes, the rest passes, other sections are skipped."""
        report = verify_paper(sections=["ppi"], cache=cache, max_n=3)
        status = {c.claim_id: c.status for c in report.claims}
        assert status["ppi.n2.max-norm"] is ClaimStatus.NOTE
        assert status["ppi.n3.max-norm"] is ClaimStatus.PASS
        assert status["ppi.n3.tight-witness"] is ClaimStatus.PASS
        assert status["ppi.n3.delta-bound"] is ClaimStatus.NOTE
        assert status["ppi.2c.c1"] is ClaimStatus.NOTE
        assert all(status[f"ppi.2c.c{c}"] is ClaimStatus.PASS for c in range(2, 7))
        assert status["3x3.*"] is ClaimStatus.SKIP
        assert status["complexity.*"] is ClaimStatus.SKIP
        assert report.exit_code == 0
        assert {c.claim_id for c in cache.get_claims("ppi")} == {
            c.claim_id for c in report.claims if c.section == "ppi"
        }

    def test_complexity_section_fast(self) -> None:
        """With slow checks skipped g(A_3x3) is not computed."""
        report = verify_paper(sections=["complexity"], skip_slow=True)
        status = {c.claim_id: c.status for c in report.claims}
        assert status["complexity.twisted-cubic"] is ClaimStatus.PASS
        assert status["complexity.sign-flip"] is ClaimStatus.PASS
        assert status["complexity.lower-vs-g"] is ClaimStatus.PASS
        assert status["complexity.3x3"] is ClaimStatus.SKIP

    def test_section_order_is_fixed(self) -> None:
        """Selection order does not change the report order."""
        report = verify_paper(sections=["complexity", "ppi"], max_n=2, skip_slow=True)
        sections = list(dict.fromkeys(c.section for c in report.claims))
        assert sections == ["3x3", "3x4", "ab", "ppi", "complexity"]

    def test_caps_become_failures(self) -> None:
        """A cap hit inside a claim is reported, not raised."""
        report = verify_paper(sections=["complexity"], limits=Limits(max_elements=1), skip_slow=True)
        assert report.exit_code == 1
        assert all("max_elements" in c.detail for c in report.failed)

    def test_bad_arguments(self) -> None:
        """Unknown sections and max_n below 2 are refused."""
        with pytest.raises(PreconditionError):
            verify_paper(sections=["4x4"])
        with pytest.raises(PreconditionError):
            verify_paper(sections=["ppi"], max_n=1)

    @pytest.mark.slow
    def test_3x3_section(self) -> None:
        """The x7 repair is a note; every other 3x3 claim passes, including all lifted faces."""
        report = verify_paper(sections=["3x3"])
        status = {c.claim_id: c.status for c in report.claims if c.section == "3x3"}
        assert not report.failed
        assert status["3x3.graver-in-ugb"] is ClaimStatus.PASS
        assert status["3x3.x7.repair"] is ClaimStatus.NOTE
        assert status["3x3.x9.lifted-face"] is ClaimStatus.PASS
        assert status["3x3.lower-bound"] is ClaimStatus.PASS
        assert report.exit_code == 0

    @pytest.mark.slow
    def test_3x4_section(self) -> None:
        """x27 is minimal and gives the bound 27; only the quoted search size differs."""
        report = verify_paper(sections=["3x4"])
        status = {c.claim_id: c.status for c in report.claims if c.section == "3x4"}
        assert not report.failed
        assert status["3x4.x27.minimal"] is ClaimStatus.PASS
        assert status["3x4.x27.layers-in-ugb"] is ClaimStatus.PASS
        assert status["3x4.x27.search-space"] is ClaimStatus.NOTE
        assert status["3x4.lower-bound"] is ClaimStatus.PASS

    @pytest.mark.slow
    def test_ab_section(self) -> None:
        """Every pair passes; (2, 4) notes its normalization."""
        report = verify_paper(sections=["ab"])
        status = {c.claim_id: c.status for c in report.claims if c.section == "ab"}
        assert not report.failed
        for pair in ("1-2", "1-3", "2-3", "3-4", "2-4"):
            assert status[f"ab.{pair}.ugb-triple"] is ClaimStatus.PASS
            assert status[f"ab.{pair}.lifted-witness"] is ClaimStatus.PASS
        assert status["ab.2-4.normalization"] is ClaimStatus.NOTE


class TestStress:
    """Opt-in heavy runs."""

    def test_cap_stops_run(self) -> None:
        """Hitting a cap is an outcome, not an error."""
        report = stress("g-3x4", Limits(max_elements=5))
        assert not report.completed
        assert report.value is None
        assert "max_elements" in report.detail
        assert "cap exceeded" in report.render()
