"""Graver complexity, lower bounds for Gröbner complexity, partition identities."""

from .graver_complexity import derived_matrix, graver_complexity, groebner_complexity_lower_bound
from .models import BoundReport, ComplexityReport, PartitionIdentity, TwoCReport
from .partitions import (
    kernel_from_ppi,
    oriented_for_ppi,
    ppi_from_kernel,
    ppi_verify_bound,
    primitive_identities,
    tight_witness,
    verify_2c,
)

__all__ = [
    "BoundReport",
    "ComplexityReport",
    "PartitionIdentity",
    "TwoCReport",
    "derived_matrix",
    "graver_complexity",
    "groebner_complexity_lower_bound",
    "kernel_from_ppi",
    "oriented_for_ppi",
    "ppi_from_kernel",
    "ppi_verify_bound",
    "primitive_identities",
    "tight_witness",
    "verify_2c",
]
