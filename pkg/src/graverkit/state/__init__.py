"""Persistent state."""

from .cache import Cache, ClaimRecord, cached_graver

__all__ = ["Cache", "ClaimRecord", "cached_graver"]
