"""Graver bases: completion, brute-force oracle and certificate check."""

from .certificate import graver_certificate_check
from .completion import ReducerIndex, graver
from .models import CertificateResult, GraverBasis
from .oracle import kernel_points_in_box, orthant_hilbert_oracle

__all__ = [
    "CertificateResult",
    "GraverBasis",
    "ReducerIndex",
    "graver",
    "graver_certificate_check",
    "kernel_points_in_box",
    "orthant_hilbert_oracle",
]
