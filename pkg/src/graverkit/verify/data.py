"""Loading the shipped witness tables."""

from __future__ import annotations

import hashlib
import json
import logging
from fractions import Fraction
from importlib import resources

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from ..errors import GraverkitError
from ..families.matrices import transportation_matrix
from ..lawrence.models import Relation
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import LatticeVector

logger = logging.getLogger(__name__)

DATA_PACKAGE = "graverkit.data"
WITNESS_FILE = "witnesses.json"
CHECKSUM_FILE = "witnesses.sha256"


class TableWitness(BaseModel):
    """Layer types of a lifted witness, each a table_rows x table_cols table in row-major order."""

    model_config = ConfigDict(frozen=True)

    name: str
    section: str
    table_rows: int
    table_cols: int
    multiplicities: tuple[int, ...]
    layers: tuple[LatticeVector, ...]

    @model_validator(mode="after")
    def check_shape(self) -> TableWitness:
        width = self.table_rows * self.table_cols
        if len(self.layers) != len(self.multiplicities):
            raise ValueError(
                f"{self.name}: {len(self.layers)} layers, {len(self.multiplicities)} multiplicities"
            )
        for k, layer in enumerate(self.layers):
            if len(layer) != width:
                raise ValueError(f"{self.name}: layer {k} has {len(layer)} entries, expected {width}")
        return self

    @property
    def matrix(self) -> IntMatrix:
        return transportation_matrix(self.table_rows, self.table_cols)

    @property
    def type(self) -> int:
        return sum(self.multiplicities)

    def relation(self) -> Relation:
        return Relation(generators=self.layers, multiplicities=self.multiplicities)

    def complement_functional(self, layer: LatticeVector) -> tuple[Fraction, ...]:
        """Indicator of the cells outside the support of layer."""
        return tuple(Fraction(int(v == 0)) for v in layer)


def _read(name: str) -> bytes:
    return resources.files(DATA_PACKAGE).joinpath(name).read_bytes()


def load_witnesses(verify_checksum: bool = True) -> dict[str, TableWitness]:
    """Witness tables by name; the transcription checksum is checked first."""
    try:
        raw = _read(WITNESS_FILE)
    except FileNotFoundError as e:
        raise GraverkitError(f"shipped data file {WITNESS_FILE} is missing") from e
    if verify_checksum:
        expected = _read(CHECKSUM_FILE).decode("ascii").split()[0]
        actual = hashlib.sha256(raw).hexdigest()
        if actual != expected:
            raise GraverkitError(f"{WITNESS_FILE} checksum mismatch: {actual[:12]} != {expected[:12]}")
    try:
        doc = json.loads(raw)
        witnesses = [TableWitness(**w) for w in doc["witnesses"]]
    except (json.JSONDecodeError, KeyError, ValidationError) as e:
        raise GraverkitError(f"{WITNESS_FILE} is malformed: {e}") from e
    logger.debug("loaded %d witness tables", len(witnesses))
    return {w.name: w for w in witnesses}
