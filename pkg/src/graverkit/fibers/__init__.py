"""Fibers, edge certificates and universal Gröbner basis membership."""

from .edges import (
    certificate_for,
    complement_indicator,
    edge_test,
    layer_certificates,
    primitive_functional,
    ugb_member,
    verify_inequality_certificate,
)
from .enumeration import fiber_enumerate, positive_row_weight
from .models import EdgeCertificate, Fiber, UGBMembership

__all__ = [
    "EdgeCertificate",
    "Fiber",
    "UGBMembership",
    "certificate_for",
    "complement_indicator",
    "edge_test",
    "fiber_enumerate",
    "layer_certificates",
    "positive_row_weight",
    "primitive_functional",
    "ugb_member",
    "verify_inequality_certificate",
]
