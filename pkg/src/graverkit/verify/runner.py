"""verify-paper: run the selected sections and collect one report."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from ..errors import PreconditionError
from ..state.cache import Cache
from ..utils.config import DEFAULT_LIMITS, Limits
from .data import load_witnesses
from .models import ClaimResult, ClaimStatus, VerificationReport
from .sections import SECTIONS, SectionRun

logger = logging.getLogger(__name__)


def run_section(
    name: str,
    limits: Limits,
    cache: Cache | None = None,
    max_n: int = 7,
    skip_slow: bool = False,
) -> list[ClaimResult]:
    """Claims of one section, in their fixed order."""
    run = SectionRun(name, limits, cache, load_witnesses(), max_n=max_n, skip_slow=skip_slow)
    SECTIONS[name](run)
    return run.claims


def _run_in_worker(
    name: str, limits: Limits, cache_path: Path | None, max_n: int, skip_slow: bool
) -> list[ClaimResult]:
    cache = Cache(cache_path) if cache_path is not None else None
    try:
        return run_section(name, limits, cache, max_n=max_n, skip_slow=skip_slow)
    finally:
        if cache is not None:
            cache.close()


def verify_paper(
    sections: Sequence[str] | None = None,
    limits: Limits | None = None,
    cache: Cache | None = None,
    threads: int = 1,
    max_n: int = 7,
    skip_slow: bool = False,
) -> VerificationReport:
    """Run the selected sections (all by default); unselected sections appear as SKIP rows.

    With threads > 1 the sections run in separate processes. The report
    order does not depend on the thread count.
    """
    limits = limits or DEFAULT_LIMITS
    selected = list(SECTIONS) if not sections else list(dict.fromkeys(sections))
    unknown = [s for s in selected if s not in SECTIONS]
    if unknown:
        raise PreconditionError(f"unknown section(s) {', '.join(unknown)}; choose from {', '.join(SECTIONS)}")
    if max_n < 2:
        raise PreconditionError(f"--max-n must be >= 2, got {max_n}")
    load_witnesses()

    results: dict[str, list[ClaimResult]] = {}
    if threads > 1 and len(selected) > 1:
        cache_path = cache.db_path if cache is not None else None
        workers = min(threads, len(selected))
        logger.info("verify: %d sections on %d workers", len(selected), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                name: pool.submit(_run_in_worker, name, limits, cache_path, max_n, skip_slow)
                for name in selected
            }
            results = {name: future.result() for name, future in futures.items()}
    else:
        for name in selected:
            results[name] = run_section(name, limits, cache, max_n=max_n, skip_slow=skip_slow)

    claims: list[ClaimResult] = []
    for name in SECTIONS:
        if name in results:
            claims.extend(results[name])
        else:
            claims.append(
                ClaimResult(
                    claim_id=f"{name}.*",
                    section=name,
                    location="-",
                    expected="-",
                    computed="-",
                    status=ClaimStatus.SKIP,
                    detail="section not selected",
                )
            )
    if cache is not None:
        for c in claims:
            if c.status is not ClaimStatus.SKIP:
                cache.record_claim(c.claim_id, c.section, c.status.value, c.expected, c.computed)
    return VerificationReport(claims=tuple(claims))
