"""The claim checks of verify-paper, grouped by section.

Each section function appends claims to a SectionRun in a fixed order.
Errors raised by the library inside a check become FAIL rows naming the
error; anything else is a bug and propagates.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from typing import NamedTuple

from ..complexity.graver_complexity import graver_complexity, groebner_complexity_lower_bound
from ..complexity.models import BoundReport
from ..complexity.partitions import ppi_verify_bound, verify_2c
from ..errors import GraverkitError
from ..families.ab import (
    ABInstance,
    ab_graver_closed_form,
    ab_lifted_witness,
    ab_relation,
    ab_ugb_triple,
    b_matrix,
)
from ..families.matrices import ab_matrix, transportation_matrix
from ..fibers.edges import certificate_for, ugb_member, verify_inequality_certificate
from ..fibers.enumeration import fiber_enumerate
from ..lawrence.faces import lifted_face_minimizers
from ..lawrence.lift import lawrence_lift
from ..lawrence.models import Relation
from ..lawrence.relations import build_witness, lemma_certificate, relation_minimal, search_space
from ..linalg.lattice import is_unimodular
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import is_zero, negative_part, positive_part
from ..state.cache import Cache, cached_graver
from ..utils.config import Limits
from .data import TableWitness
from .models import ClaimResult, ClaimStatus
from .repair import repair_relation

logger = logging.getLogger(__name__)

AB_PAIRS = ((1, 2), (1, 3), (2, 3), (3, 4), (2, 4))
X27_MULTIPLICITIES = (1, 2, 3, 3, 5, 6, 7)
X27_QUOTED_SEARCH = 16128


class Check(NamedTuple):
    computed: str
    status: ClaimStatus
    detail: str = ""


def verdict(computed: object, ok: bool, detail: str = "") -> Check:
    return Check(str(computed), ClaimStatus.PASS if ok else ClaimStatus.FAIL, detail)


def note(computed: object, detail: str) -> Check:
    return Check(str(computed), ClaimStatus.NOTE, detail)


def _flag(value: bool) -> str:
    return "true" if value else "false"


class SectionRun:
    """Collects the claims of one section."""

    def __init__(
        self,
        section: str,
        limits: Limits,
        cache: Cache | None,
        witnesses: dict[str, TableWitness],
        max_n: int = 7,
        skip_slow: bool = False,
    ) -> None:
        self.section = section
        self.limits = limits
        self.cache = cache
        self.witnesses = witnesses
        self.max_n = max_n
        self.skip_slow = skip_slow
        self.claims: list[ClaimResult] = []

    def check(self, claim_id: str, location: str, expected: object, compute: Callable[[], Check]) -> Check:
        start = time.perf_counter()
        try:
            result = compute()
        except GraverkitError as e:
            result = Check("error", ClaimStatus.FAIL, f"{type(e).__name__}: {e}")
        elapsed = time.perf_counter() - start
        self.claims.append(
            ClaimResult(
                claim_id=claim_id,
                section=self.section,
                location=location,
                expected=str(expected),
                computed=result.computed,
                status=result.status,
                seconds=elapsed,
                detail=result.detail,
            )
        )
        logger.info("%s: %s (%.2fs)", claim_id, result.status.value, elapsed)
        return result

    def skip(self, claim_id: str, location: str, expected: object, reason: str) -> None:
        self.claims.append(
            ClaimResult(
                claim_id=claim_id,
                section=self.section,
                location=location,
                expected=str(expected),
                computed="-",
                status=ClaimStatus.SKIP,
                detail=reason,
            )
        )


# Table witnesses


def _layers_in_ugb(run: SectionRun, matrix: IntMatrix, witness: TableWitness) -> Check:
    distinct = list(dict.fromkeys(witness.layers))
    members = [ugb_member(matrix, g, run.limits) for g in distinct]
    passed = sum(1 for m in members if m.member)
    bad = [m.vector for m in members if not m.member]
    return verdict(f"{passed}/{len(distinct)}", passed == len(distinct), f"not in U: {bad}" if bad else "")


def _complement_certificates(
    run: SectionRun, matrix: IntMatrix, rel: Relation, witness: TableWitness
) -> Check:
    """Each layer's complement-of-support indicator is tight exactly at its two parts."""
    failures = []
    for g in dict.fromkeys(rel.generators):
        top, bottom = positive_part(g), negative_part(g)
        fiber = fiber_enumerate(matrix, matrix.apply(top), run.limits)
        if not verify_inequality_certificate(fiber, witness.complement_functional(g), (top, bottom)):
            failures.append(g)
    distinct = len(dict.fromkeys(rel.generators))
    return verdict(
        f"{distinct - len(failures)}/{distinct}", not failures, f"fails for {failures}" if failures else ""
    )


def _lifted_face(run: SectionRun, matrix: IntMatrix, rel: Relation, witness: TableWitness) -> Check:
    """Minimize the concatenated complement certificate over the lifted fiber of the witness."""
    layered = build_witness(rel)
    certificates = []
    for g in rel.generators:
        fiber = fiber_enumerate(matrix, matrix.apply(positive_part(g)), run.limits)
        certificates.append(certificate_for(fiber, witness.complement_functional(g)))
    functional = lemma_certificate(rel, certificates)
    lift = lawrence_lift(matrix, rel.norm)
    top, bottom = positive_part(layered.flat), negative_part(layered.flat)
    result = lifted_face_minimizers(lift, lift.matrix.apply(top), functional, cap=4, limits=run.limits)
    ok = result.count == 2 and set(result.minimizers) == {top, bottom}
    return verdict(
        f"{result.count} minimizers", ok, f"min {result.min_value} over {result.states} DP states"
    )


def _table_witness_claims(run: SectionRun, matrix: IntMatrix, witness: TableWitness) -> Relation | None:
    """Shared checks for a printed witness; returns its usable relation, if any."""
    name, prefix = witness.name, f"{run.section}.{witness.name}"
    where = f"{name} layer table"
    printed = witness.relation()
    sums_to_zero = is_zero(printed.total())

    def zero_sum() -> Check:
        if sums_to_zero:
            return verdict("zero", True)
        return note(printed.total(), "the printed layers do not sum to zero")

    run.check(f"{prefix}.zero-sum", where, "zero", zero_sum)
    run.check(f"{prefix}.type", where, name[1:], lambda: verdict(witness.type, str(witness.type) == name[1:]))
    run.check(f"{prefix}.layers-in-ugb", where, "all", lambda: _layers_in_ugb(run, matrix, witness))

    if sums_to_zero:
        minimal = run.check(
            f"{prefix}.minimal",
            where,
            "minimal",
            lambda: _minimal_check(printed),
        )
        return printed if minimal.status is ClaimStatus.PASS else None

    found: list[Relation] = []

    def repair() -> Check:
        candidates = cached_graver(matrix, run.limits, run.cache).elements
        repairs = repair_relation(printed, candidates)
        if not repairs:
            return verdict("none", False, "no single-layer replacement gives a minimal relation")
        found.append(repairs[0].relation)
        others = "; ".join(r.describe() for r in repairs[1:])
        return note(
            f"{len(repairs)} found",
            f"continuing with {repairs[0].describe()}" + (f"; also {others}" if others else ""),
        )

    run.check(f"{prefix}.repair", where, f"minimal relation of type {witness.type}", repair)
    return found[0] if found else None


def _unimodular(matrix: IntMatrix) -> Check:
    ok = is_unimodular(matrix)
    return verdict(_flag(ok), ok)


def _minimal_check(rel: Relation) -> Check:
    result = relation_minimal(rel)
    detail = "" if result.minimal else f"sub-relation {result.witness}"
    return verdict("minimal" if result.minimal else "not minimal", result.minimal, detail)


def section_3x3(run: SectionRun) -> None:
    matrix = transportation_matrix(3, 3)
    run.check("3x3.unimodular", "A_3x3", "true", lambda: _unimodular(matrix))

    def graver_is_ugb() -> Check:
        basis = cached_graver(matrix, run.limits, run.cache)
        members = sum(1 for g in basis.elements if ugb_member(matrix, g, run.limits).member)
        return verdict(f"{members}/{basis.size}", members == basis.size and basis.size == 15)

    run.check("3x3.graver-in-ugb", "U(A_3x3) = G(A_3x3)", "15/15", graver_is_ugb)

    relations: list[Relation] = []
    for name in ("x6", "x7", "x8", "x9"):
        witness = run.witnesses[name]
        rel = _table_witness_claims(run, matrix, witness)
        if rel is None:
            continue
        relations.append(rel)
        prefix = f"3x3.{name}"
        run.check(
            f"{prefix}.certificates",
            f"{name} layer table",
            "all",
            lambda rel=rel, witness=witness: _complement_certificates(run, matrix, rel, witness),
        )
        if name != "x9" and run.skip_slow:
            run.skip(f"{prefix}.lifted-face", f"{name} lifted fiber", "2 minimizers", "slow checks skipped")
            continue
        run.check(
            f"{prefix}.lifted-face",
            f"{name} lifted fiber",
            "2 minimizers",
            lambda rel=rel, witness=witness: _lifted_face(run, matrix, rel, witness),
        )

    def lower_bound() -> Check:
        value = groebner_complexity_lower_bound(matrix, relations, run.limits)
        return verdict(value, value == 9)

    run.check("3x3.lower-bound", "u(A_3x3) >= 9", 9, lower_bound)


def section_3x4(run: SectionRun) -> None:
    witness = run.witnesses["x27"]
    matrix = witness.matrix
    run.check("3x4.unimodular", "A_3x4", "true", lambda: _unimodular(matrix))
    rel = _table_witness_claims(run, matrix, witness)
    run.check(
        "3x4.x27.multiplicities",
        "x27 layer table",
        "(1,2,3,3,5,6,7) total 27",
        lambda: verdict(
            f"{tuple(sorted(witness.multiplicities))} total {witness.type}",
            tuple(sorted(witness.multiplicities)) == X27_MULTIPLICITIES and witness.type == 27,
        ),
    )

    def searched() -> Check:
        size = search_space(witness.relation())
        detail = f"prod(lambda_i + 1) = {size}; {size // 2} complementary pairs"
        if size == X27_QUOTED_SEARCH:
            return verdict(size, True)
        return note(size, detail)

    run.check("3x4.x27.search-space", "x27 relation", X27_QUOTED_SEARCH, searched)
    if rel is None:
        run.skip("3x4.lower-bound", "u(A_3x4) >= 27", 27, "x27 relation unusable")
        return

    def lower_bound() -> Check:
        value = groebner_complexity_lower_bound(matrix, [rel], run.limits)
        return verdict(value, value == 27)

    run.check("3x4.lower-bound", "u(A_3x4) >= 27", 27, lower_bound)


# A_{a,b}


def _ab_claims(run: SectionRun, inst: ABInstance) -> None:
    prefix = f"ab.{inst.a}-{inst.b}"
    label = inst.label()

    def closed_form() -> Check:
        computed = cached_graver(inst.matrix, run.limits, run.cache)
        expected = ab_graver_closed_form(inst)
        return verdict(f"{computed.size} pairs", computed.elements == expected.elements)

    run.check(f"{prefix}.closed-form", f"G({label})", f"{inst.a_norm + inst.b_norm + 2} pairs", closed_form)

    def complexity() -> Check:
        report = graver_complexity(inst.matrix, run.limits, run.cache)
        return verdict(report.g_value, report.g_value == inst.complexity)

    run.check(f"{prefix}.complexity", f"g({label})", inst.complexity, complexity)
    if not inst.normalized:
        run.check(
            f"{prefix}.normalization",
            f"g({label})",
            inst.complexity,
            lambda: note(
                f"raw {2 * (inst.a + inst.b)}",
                f"gcd {inst.gcd}: 2(a+b) = {2 * (inst.a + inst.b)}, "
                f"normalized value {inst.complexity}",
            ),
        )

    def triple() -> Check:
        members = ab_ugb_triple(inst, run.limits)
        ok = [m.name for m in members if m.ok]
        bad = [m.name for m in members if m.name not in ok]
        return verdict(f"{len(ok)}/3", not bad, f"failing: {', '.join(bad)}" if bad else "")

    run.check(f"{prefix}.ugb-triple", f"U({label})", "3/3", triple)
    rel = ab_relation(inst)
    run.check(
        f"{prefix}.relation", f"{label} relation {rel.multiplicities}", "minimal", lambda: _minimal_check(rel)
    )

    def witness_type() -> Check:
        size = build_witness(rel).type
        return verdict(size, size == inst.complexity)

    run.check(f"{prefix}.witness-type", f"{label} witness", inst.complexity, witness_type)
    run.check(
        f"{prefix}.support-vs-sum",
        f"{label} relation",
        f"sum {rel.norm}",
        lambda: note(
            f"support {rel.support_size}",
            f"|supp(lambda)| = {rel.support_size}, sum(lambda) = {rel.norm}",
        ),
    )

    def kernels() -> Check:
        report = b_matrix(inst)
        ok = report.kernels_equal and report.factorization_holds
        return verdict(
            f"equal={_flag(report.kernels_equal)} G=(v h)B={_flag(report.factorization_holds)}", ok
        )

    where = f"ker G_({inst.a},{inst.b}) = ker B_{inst.a_norm + inst.b_norm}"
    run.check(f"{prefix}.kernel-equality", where, "equal", kernels)

    def lifted() -> Check:
        _, result = ab_lifted_witness(inst, run.limits)
        return verdict(f"{result.count} minimizers", result.count == 2)

    run.check(f"{prefix}.lifted-witness", f"{label} lifted fiber", "2 minimizers", lifted)


def section_ab(run: SectionRun) -> None:
    for a, b in AB_PAIRS:
        _ab_claims(run, ABInstance(a=a, b=b))


# Partition identities


def _ppi_claims(run: SectionRun, n: int) -> None:
    reports: list[BoundReport] = []

    def bound() -> Check:
        report = ppi_verify_bound(n, run.limits, run.cache)
        reports.append(report)
        if n == 2 and not report.holds:
            return note(report.max_norm, f"ker(A_2) is spanned by (1,-1,1) of 1-norm {report.max_norm}")
        return verdict(report.max_norm, report.holds)

    run.check(f"ppi.n{n}.max-norm", f"G(A_{n})", 2 * (n - 1), bound)
    if not reports:
        return
    report = reports[0]
    if n >= 3:
        run.check(
            f"ppi.n{n}.tight-witness",
            f"G(A_{n})",
            "present",
            lambda: verdict("present" if report.tight_present else "absent", report.tight_present),
        )

    def deltas() -> Check:
        bad = report.delta_counterexample
        if bad is None:
            return verdict("true", True)
        if not report.summand_bound_holds:
            worst = next(p for p in report.identities if p.k + p.ones > p.delta_plus() + p.delta_minus())
            return verdict("false", False, f"k + l > D+ + D- for {worst.render()}")
        spread = bad.delta_plus() + bad.delta_minus()
        return note(
            "violated",
            f"{bad.render()} has D+ + D- = {spread} > {n - 1}; the 1-norm bound is checked separately",
        )

    run.check(f"ppi.n{n}.delta-bound", f"G(A_{n})", "true", deltas)


def _two_c_claim(run: SectionRun, c: int) -> None:
    def two_c() -> Check:
        report = verify_2c(c, run.limits, run.cache)
        computed = f"{report.max_norm} kernels={'equal' if report.kernels_equal else 'differ'}"
        if c == 1 and not report.holds:
            return note(computed, "the 2c bound does not hold for c = 1")
        return verdict(computed, report.holds)

    run.check(f"ppi.2c.c{c}", f"(1..1 0; 0 1..{c} 1)", f"{2 * c} kernels=equal", two_c)


def section_ppi(run: SectionRun) -> None:
    for n in range(2, run.max_n + 1):
        _ppi_claims(run, n)
    for c in range(1, 7):
        _two_c_claim(run, c)


# Graver complexity


def section_complexity(run: SectionRun) -> None:
    twisted = ab_matrix(1, 2)

    def cubic() -> Check:
        report = graver_complexity(twisted, run.limits, run.cache)
        return verdict(report.g_value, report.g_value == 6, f"witness {report.witness}")

    run.check("complexity.twisted-cubic", "g(A_(1,2))", 6, cubic)

    def flipped() -> Check:
        first = cached_graver(twisted, run.limits, run.cache)
        flips = [j % 2 == 0 for j in range(first.size)]
        report = graver_complexity(twisted, run.limits, run.cache, flips=flips)
        return verdict(report.g_value, report.g_value == 6)

    run.check("complexity.sign-flip", "g(A_(1,2)) with flipped columns", 6, flipped)

    def sandwich() -> Check:
        inst = ABInstance(a=1, b=2)
        lower = groebner_complexity_lower_bound(twisted, [ab_relation(inst)], run.limits)
        upper = graver_complexity(twisted, run.limits, run.cache).g_value
        return verdict(f"{lower} <= {upper}", lower <= upper and lower == 6)

    run.check("complexity.lower-vs-g", "u(A_(1,2)) <= g(A_(1,2))", "6 <= 6", sandwich)

    if run.skip_slow:
        run.skip("complexity.3x3", "g(A_3x3)", 9, "slow checks skipped")
        return

    def three_by_three() -> Check:
        report = graver_complexity(transportation_matrix(3, 3), run.limits, run.cache)
        return verdict(
            report.g_value,
            report.g_value == 9,
            f"{report.graver_size} columns, {report.derived_graver_size} second-stage pairs",
        )

    run.check("complexity.3x3", "g(A_3x3)", 9, three_by_three)


SECTIONS: dict[str, Callable[[SectionRun], None]] = {
    "3x3": section_3x3,
    "3x4": section_3x4,
    "ab": section_ab,
    "ppi": section_ppi,
    "complexity": section_complexity,
}
