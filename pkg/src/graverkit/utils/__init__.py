"""Utility modules for graverkit."""

from .config import DEFAULT_LIMITS, Config, Limits

__all__ = ["Config", "DEFAULT_LIMITS", "Limits"]
