"""graverkit - exact Graver bases, toric Groebner bases and Lawrence liftings."""

__version__ = "0.1.0"
__app_id__ = "graverkit"
