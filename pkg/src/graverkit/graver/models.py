"""Pydantic models for Graver bases."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ..linalg.matrix import IntMatrix, format_matrix
from ..linalg.vectors import LatticeVector, negate, norm1


class GraverBasis(BaseModel):
    """Graver basis of a matrix, one canonical representative per +/- pair."""

    model_config = ConfigDict(frozen=True)

    matrix: IntMatrix
    elements: tuple[LatticeVector, ...] = Field(default_factory=tuple)

    @property
    def size(self) -> int:
        """Number of +/- pairs."""
        return len(self.elements)

    @property
    def symmetric(self) -> tuple[LatticeVector, ...]:
        """Expanded view closed under negation."""
        return self.elements + tuple(negate(g) for g in self.elements)

    @property
    def max_norm(self) -> int:
        return max((norm1(g) for g in self.elements), default=0)

    def __contains__(self, z: object) -> bool:
        if not isinstance(z, tuple):
            return False
        return z in self.elements or negate(z) in self.elements

    def to_text(self) -> str:
        return format_matrix(self.elements, self.matrix.cols)


class CertificateResult(BaseModel):
    """Outcome of checking a claimed Graver basis."""

    model_config = ConfigDict(frozen=True)

    ok: bool
    criterion: str | None = None
    pair: tuple[LatticeVector, LatticeVector] | None = None
    witness: LatticeVector | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok
