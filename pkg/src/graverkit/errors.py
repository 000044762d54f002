"""Exception hierarchy for graverkit."""

from __future__ import annotations


class GraverkitError(Exception):
    """Base exception for graverkit errors."""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class MatrixFormatError(GraverkitError):
    """Malformed matrix text."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
        self.line = line
        self.column = column


class ResourceLimitExceeded(GraverkitError):
    """A configured cap was hit; the instance is too large for the limits."""

    def __init__(self, cap: str, limit: int, detail: str = "") -> None:
        text = f"cap {cap}={limit} exceeded"
        if detail:
            text = f"{text} ({detail})"
        super().__init__(text)
        self.cap = cap
        self.limit = limit


class InfiniteFiberError(GraverkitError):
    """ker(A) meets the nonnegative orthant, so fibers are unbounded."""


class PreconditionError(GraverkitError):
    """An operation was called outside its precondition."""


class CertificateFailure(GraverkitError):
    """A certificate or closed form claimed to hold did not validate."""
