"""Pydantic models for verification claims and reports."""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field


class ClaimStatus(StrEnum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOTE = "NOTE"  # documented discrepancy, does not fail the run
    SKIP = "SKIP"


class ClaimResult(BaseModel):
    """One checked claim."""

    model_config = ConfigDict(frozen=True)

    claim_id: str
    section: str
    location: str
    expected: str
    computed: str
    status: ClaimStatus
    seconds: float = 0.0
    detail: str = ""


class VerificationReport(BaseModel):
    """Claims in a fixed order: section order, then claim order within it."""

    model_config = ConfigDict(frozen=True)

    claims: tuple[ClaimResult, ...] = Field(default_factory=tuple)

    @property
    def failed(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.status is ClaimStatus.FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def counts(self) -> dict[ClaimStatus, int]:
        out = dict.fromkeys(ClaimStatus, 0)
        for c in self.claims:
            out[c.status] += 1
        return out

    def render(self, timings: bool = False) -> str:
        """Aligned text table; wall times only with timings."""
        headers = ["claim", "where", "expected", "computed", "status"]
        rows = [[c.claim_id, c.location, c.expected, c.computed, c.status.value] for c in self.claims]
        if timings:
            headers.append("seconds")
            for row, c in zip(rows, self.claims, strict=True):
                row.append(f"{c.seconds:.2f}")
        widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths, strict=True)).rstrip()]
        for row in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths, strict=True)).rstrip())
        summary = ", ".join(f"{n} {s.value}" for s, n in self.counts().items() if n)
        lines.append("")
        lines.append(f"{len(self.claims)} claims: {summary or 'none'}")
        notes = [c for c in self.claims if c.detail and c.status in (ClaimStatus.NOTE, ClaimStatus.FAIL)]
        for c in notes:
            lines.append(f"{c.status.value} {c.claim_id}: {c.detail}")
        return "\n".join(lines) + "\n"

    def porcelain(self) -> str:
        """key=value lines, one claim per line."""
        out = []
        for c in self.claims:
            out.append(
                f"claim={c.claim_id} section={c.section} status={c.status.value} "
                f"expected={c.expected.replace(' ', '_')} computed={c.computed.replace(' ', '_')}"
            )
        return "\n".join(out) + ("\n" if out else "")
