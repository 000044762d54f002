"""Pydantic models for fibers and edge certificates."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator

from ..linalg.matrix import IntMatrix, format_matrix
from ..linalg.vectors import LatticeVector


class Fiber(BaseModel):
    """All nonnegative integer points y with Ay = rhs, sorted."""

    model_config = ConfigDict(frozen=True)

    matrix: IntMatrix
    rhs: LatticeVector
    points: tuple[LatticeVector, ...]

    _point_set: frozenset[LatticeVector] = PrivateAttr(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.points)

    def model_post_init(self, __context: Any) -> None:
        self._point_set = frozenset(self.points)

    def __contains__(self, y: object) -> bool:
        return y in self._point_set

    def to_text(self) -> str:
        return format_matrix(self.points, self.matrix.cols)


class EdgeCertificate(BaseModel):
    """A functional c with c.y >= value on the fiber, tight exactly on tight_set."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    functional: tuple[Fraction, ...]
    value: Fraction
    tight_set: tuple[LatticeVector, ...]

    @field_validator("functional", mode="before")
    @classmethod
    def coerce_functional(cls, v: Any) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in v)

    @field_validator("value", mode="before")
    @classmethod
    def coerce_value(cls, v: Any) -> Fraction:
        return Fraction(v)

    def integral(self) -> tuple[int, ...] | None:
        """The functional as integers when every entry is integral."""
        if all(c.denominator == 1 for c in self.functional):
            return tuple(int(c) for c in self.functional)
        return None


class UGBMembership(BaseModel):
    """Outcome of a universal Gröbner basis membership test."""

    model_config = ConfigDict(frozen=True)

    vector: LatticeVector
    member: bool
    certificate: EdgeCertificate | None = None
    fiber_size: int = 0

    def __bool__(self) -> bool:
        return self.member
