"""Term orders on monomials x^u, u in Z^n_{>=0}.

A TermOrder compares exponent vectors first by a rational cost c.u and
then by a total tie-break order, either lexicographic or degree reverse
lexicographic, each over a permutation of the variables.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..errors import PreconditionError
from ..linalg.vectors import LatticeVector, is_zero, negate, negative_part, positive_part

TieBreak = Literal["lex", "degrevlex"]


class TermOrder(BaseModel):
    """Cost vector refined by lex or degrevlex over a variable permutation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cost: tuple[Fraction, ...]
    tiebreak: TieBreak = "degrevlex"
    permutation: tuple[int, ...] = Field(default=(), validate_default=True)

    @field_validator("cost", mode="before")
    @classmethod
    def coerce_cost(cls, v: Any) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in v)

    @field_validator("permutation")
    @classmethod
    def check_permutation(cls, v: tuple[int, ...], info: ValidationInfo) -> tuple[int, ...]:
        """Empty means the natural order x_1 > x_2 > ... > x_n."""
        n = len(info.data.get("cost", ()))
        if not v:
            return tuple(range(n))
        if sorted(v) != list(range(n)):
            raise ValueError(f"{v} is not a permutation of 0..{n - 1}")
        return v

    @classmethod
    def lex(cls, n: int, cost: Sequence[int | Fraction] | None = None) -> TermOrder:
        return cls(cost=tuple(cost) if cost is not None else (0,) * n, tiebreak="lex")

    @classmethod
    def degrevlex(cls, n: int, cost: Sequence[int | Fraction] | None = None) -> TermOrder:
        return cls(cost=tuple(cost) if cost is not None else (0,) * n, tiebreak="degrevlex")

    @property
    def width(self) -> int:
        return len(self.cost)

    def key(self, u: Sequence[int]) -> tuple[Any, ...]:
        """Sort key of the monomial x^u; larger key means larger monomial.

        degrevlex: higher total degree wins, then the last variable (under
        the permutation) with differing exponent decides and the smaller
        exponent wins.
        """
        weight = sum((c * a for c, a in zip(self.cost, u, strict=True)), Fraction(0))
        if self.tiebreak == "lex":
            return weight, tuple(u[p] for p in self.permutation)
        return weight, sum(u), tuple(-u[p] for p in reversed(self.permutation))

    def compare(self, u: Sequence[int], v: Sequence[int]) -> int:
        """-1, 0 or 1 as x^u is smaller, equal or larger than x^v."""
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def orient(self, z: Sequence[int]) -> LatticeVector:
        """z or -z, whichever has the larger monomial on its positive part."""
        if len(z) != self.width:
            raise PreconditionError(f"vector of length {len(z)} for an order on {self.width} variables")
        if is_zero(z):
            raise PreconditionError("cannot orient the zero vector")
        if self.key(positive_part(z)) > self.key(negative_part(z)):
            return tuple(z)
        return negate(z)


def orient(z: Sequence[int], order: TermOrder) -> LatticeVector:
    return order.orient(z)


def random_generic_order(n: int, rng: random.Random, high: int = 100) -> TermOrder:
    """Random integer cost in [0, high]^n refined by degrevlex."""
    return TermOrder.degrevlex(n, [rng.randint(0, high) for _ in range(n)])
