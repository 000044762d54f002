"""Pydantic models for Lawrence liftings, layered vectors and relations."""

from __future__ import annotations

from fractions import Fraction

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    computed_field,
    field_validator,
    model_validator,
)

from ..linalg.matrix import IntMatrix
from ..linalg.vectors import LatticeVector, is_zero


class LawrenceLift(BaseModel):
    """A^(N): N copies of I_n on top of block-diagonal A."""

    model_config = ConfigDict(frozen=True)

    base: IntMatrix
    copies: int = Field(ge=1)
    matrix: IntMatrix

    @property
    def width(self) -> int:
        return self.base.cols

    def layer_rhs(self, b: tuple[int, ...], i: int) -> tuple[int, ...]:
        """The block of b constrained by the i-th copy of A."""
        n, d = self.base.cols, self.base.rows
        return b[n + d * i : n + d * (i + 1)]


class LayeredVector(BaseModel):
    """A vector of Z^{nN} seen as N layers of length n."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(ge=1)
    layers: tuple[LatticeVector, ...]

    @field_validator("layers")
    @classmethod
    def check_layers(cls, v: tuple[LatticeVector, ...], info: ValidationInfo) -> tuple[LatticeVector, ...]:
        width = info.data.get("width")
        for i, layer in enumerate(v):
            if len(layer) != width:
                raise ValueError(f"layer {i} has length {len(layer)}, expected {width}")
        return v

    @classmethod
    def from_flat(cls, x: tuple[int, ...], width: int) -> LayeredVector:
        if width < 1 or len(x) % width:
            raise ValueError(f"vector of length {len(x)} does not split into layers of {width}")
        return cls(width=width, layers=tuple(x[k : k + width] for k in range(0, len(x), width)))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def type(self) -> int:
        """Number of nonzero layers."""
        return sum(1 for layer in self.layers if not is_zero(layer))

    @property
    def copies(self) -> int:
        return len(self.layers)

    @property
    def flat(self) -> LatticeVector:
        return tuple(v for layer in self.layers for v in layer)


class Relation(BaseModel):
    """Nonnegative multiplicities over indexed generators; sum lambda_i g_i is zero."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[LatticeVector, ...]
    multiplicities: tuple[int, ...]

    @model_validator(mode="after")
    def check_shape(self) -> Relation:
        if not self.generators:
            raise ValueError("a relation needs at least one generator")
        if len(self.generators) != len(self.multiplicities):
            raise ValueError(
                f"{len(self.generators)} generators but {len(self.multiplicities)} multiplicities"
            )
        widths = {len(g) for g in self.generators}
        if len(widths) != 1:
            raise ValueError(f"generators of different lengths: {sorted(widths)}")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("multiplicities must be nonnegative")
        return self

    @property
    def width(self) -> int:
        return len(self.generators[0])

    @property
    def norm(self) -> int:
        """Total multiplicity, the number of layers of the witness."""
        return sum(self.multiplicities)

    @property
    def support_size(self) -> int:
        return sum(1 for m in self.multiplicities if m)

    def total(self) -> LatticeVector:
        acc = [0] * self.width
        for g, m in zip(self.generators, self.multiplicities, strict=True):
            for k, v in enumerate(g):
                acc[k] += m * v
        return tuple(acc)


class MinimalityResult(BaseModel):
    """Whether a relation is minimal; otherwise a proper sub-relation mu."""

    model_config = ConfigDict(frozen=True)

    minimal: bool
    witness: tuple[int, ...] | None = None
    candidates: int = 0

    def __bool__(self) -> bool:
        return self.minimal


class FaceMinimizers(BaseModel):
    """Minimum of a functional over a lifted fiber and its minimizers."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    min_value: Fraction | None
    count: int
    minimizers: tuple[LatticeVector, ...] = ()
    states: int = 0
