"""Term orders, toric Gröbner bases and normal forms."""

from .buchberger import GroebnerBasis, groebner, normal_form, require_pointed
from .order import TermOrder, TieBreak, orient, random_generic_order

__all__ = [
    "GroebnerBasis",
    "TermOrder",
    "TieBreak",
    "groebner",
    "normal_form",
    "orient",
    "random_generic_order",
    "require_pointed",
]
