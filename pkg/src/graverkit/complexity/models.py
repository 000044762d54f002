"""Pydantic models for complexity reports and partition identities."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..linalg.matrix import IntMatrix
from ..linalg.vectors import LatticeVector


class ComplexityReport(BaseModel):
    """g(A) as the largest 1-norm in the Graver basis of the derived matrix."""

    model_config = ConfigDict(frozen=True)

    matrix: IntMatrix
    graver_size: int
    derived_matrix: IntMatrix | None
    derived_graver_size: int
    g_value: int
    witness: LatticeVector | None

    @model_validator(mode="after")
    def check_witness(self) -> ComplexityReport:
        norm = sum(abs(v) for v in self.witness) if self.witness is not None else 0
        if norm != self.g_value:
            raise ValueError(f"witness has 1-norm {norm}, report says {self.g_value}")
        return self


class PartitionIdentity(BaseModel):
    """a_1 + ... + a_k + l * 1 = b_1 + ... + b_k over parts in 1..n."""

    model_config = ConfigDict(frozen=True)

    left: tuple[int, ...]
    ones: int = Field(ge=0)
    right: tuple[int, ...]
    primitive: bool = False

    @model_validator(mode="after")
    def check_identity(self) -> PartitionIdentity:
        if len(self.left) != len(self.right):
            raise ValueError(f"{len(self.left)} left parts but {len(self.right)} right parts")
        if sum(self.left) + self.ones != sum(self.right):
            raise ValueError(f"{self.render()} does not balance")
        if set(self.left) & set(self.right):
            raise ValueError(f"{self.render()} uses a part on both sides")
        if list(self.left) != sorted(self.left) or list(self.right) != sorted(self.right):
            raise ValueError("parts must be sorted ascending")
        return self

    @property
    def k(self) -> int:
        return len(self.left)

    @property
    def norm(self) -> int:
        """1-norm of the kernel vector, 2k + l."""
        return 2 * self.k + self.ones

    def deltas(self) -> tuple[int, ...]:
        """a_i - b_i over the sorted parts."""
        return tuple(a - b for a, b in zip(self.left, self.right, strict=True))

    def delta_plus(self) -> int:
        """Largest positive part of the transformed identity; the ones count as parts 1."""
        positive = [d for d in self.deltas() if d > 0]
        if self.ones:
            positive.append(1)
        return max(positive, default=0)

    def delta_minus(self) -> int:
        return max((-d for d in self.deltas() if d < 0), default=0)

    def render(self) -> str:
        lhs = [str(a) for a in self.left] + ["1"] * self.ones
        rhs = [str(b) for b in self.right]
        return f"{' + '.join(lhs) or '0'} = {' + '.join(rhs) or '0'}"


class BoundReport(BaseModel):
    """Largest Graver 1-norm of A_n against 2(n-1), with the delta checks."""

    model_config = ConfigDict(frozen=True)

    n: int
    max_norm: int
    expected: int
    holds: bool
    tight_present: bool
    delta_bound_holds: bool
    summand_bound_holds: bool
    delta_counterexample: PartitionIdentity | None = None
    identities: tuple[PartitionIdentity, ...]


class TwoCReport(BaseModel):
    """Graver 1-norm bound 2c for (1 ... 1 0; 0 1 ... c 1)."""

    model_config = ConfigDict(frozen=True)

    c: int
    max_norm: int
    kernels_equal: bool

    @property
    def holds(self) -> bool:
        return self.kernels_equal and self.max_norm == 2 * self.c
