"""Opt-in stress runs with informational output only."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict

from ..complexity.graver_complexity import graver_complexity
from ..errors import ResourceLimitExceeded
from ..groebner.buchberger import groebner
from ..groebner.order import TermOrder
from ..lawrence.lift import lawrence_lift
from ..lawrence.relations import build_witness
from ..linalg.vectors import negate
from ..state.cache import Cache
from ..utils.config import DEFAULT_LIMITS, Limits
from .data import load_witnesses

logger = logging.getLogger(__name__)


class StressReport(BaseModel):
    """What a stress run reached; hitting a cap is a reported outcome, not an error."""

    model_config = ConfigDict(frozen=True)

    name: str
    completed: bool
    value: int | None
    reference: str
    detail: str
    seconds: float

    def render(self) -> str:
        lines = [
            f"stress {self.name}",
            f"  outcome    {'completed' if self.completed else 'cap exceeded'}",
            f"  value      {self.value if self.value is not None else '-'}",
            f"  reference  {self.reference}",
            f"  detail     {self.detail}",
        ]
        return "\n".join(lines) + "\n"


def _gb_3x3_9(limits: Limits, cache: Cache | None) -> tuple[int, str]:
    """Gröbner basis of the 9-fold lifting under the x9 complement cost, degrevlex ties."""
    witness = load_witnesses()["x9"]
    layered = build_witness(witness.relation())
    lift = lawrence_lift(witness.matrix, layered.copies)
    cost = tuple(int(v == 0) for v in layered.flat)
    gb = groebner(lift.matrix, TermOrder.degrevlex(lift.matrix.cols, cost), limits)
    flat = layered.flat
    present = flat in gb.elements or negate(flat) in gb.elements
    return gb.size, f"x9 {'is' if present else 'is not'} among the elements"


def _g_3x4(limits: Limits, cache: Cache | None) -> tuple[int, str]:
    report = graver_complexity(load_witnesses()["x27"].matrix, limits, cache)
    return report.g_value, f"{report.graver_size} columns, {report.derived_graver_size} second-stage pairs"


STRESS_RUNS: dict[str, tuple[Callable[[Limits, Cache | None], tuple[int, str]], str]] = {
    "gb-3x3-9": (_gb_3x3_9, "218785 elements"),
    "g-3x4": (_g_3x4, "27 (conjectured)"),
}


def stress(name: str, limits: Limits | None = None, cache: Cache | None = None) -> StressReport:
    """Run one named stress computation; caps stop it without failing."""
    runner, reference = STRESS_RUNS[name]
    start = time.perf_counter()
    try:
        value, detail = runner(limits or DEFAULT_LIMITS, cache)
        completed = True
    except ResourceLimitExceeded as e:
        logger.warning("stress %s stopped: %s", name, e)
        value, detail, completed = None, str(e), False
    return StressReport(
        name=name,
        completed=completed,
        value=value,
        reference=reference,
        detail=detail,
        seconds=time.perf_counter() - start,
    )
