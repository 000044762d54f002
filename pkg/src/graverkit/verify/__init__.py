"""verify-paper harness and stress runs."""

from .data import TableWitness, load_witnesses
from .models import ClaimResult, ClaimStatus, VerificationReport
from .repair import LayerRepair, repair_relation
from .runner import run_section, verify_paper
from .sections import SECTIONS
from .stress import STRESS_RUNS, StressReport, stress

__all__ = [
    "SECTIONS",
    "STRESS_RUNS",
    "ClaimResult",
    "ClaimStatus",
    "LayerRepair",
    "StressReport",
    "TableWitness",
    "VerificationReport",
    "load_witnesses",
    "repair_relation",
    "run_section",
    "stress",
    "verify_paper",
]
