"""Search for single-layer corrections of a witness relation that does not sum to zero."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict

from ..lawrence.models import Relation
from ..lawrence.relations import relation_minimal
from ..linalg.vectors import LatticeVector, is_zero, negate

logger = logging.getLogger(__name__)


class LayerRepair(BaseModel):
    """Replace layer index `layer` by `replacement`, keeping every multiplicity."""

    model_config = ConfigDict(frozen=True)

    layer: int
    original: LatticeVector
    replacement: LatticeVector
    relation: Relation

    def describe(self) -> str:
        times = self.relation.multiplicities[self.layer]
        return f"layer {self.layer + 1} {self.original} -> {self.replacement} (x{times})"


def repair_relation(rel: Relation, candidates: Sequence[LatticeVector]) -> list[LayerRepair]:
    """Every single-layer replacement from +/-candidates giving a zero-sum minimal relation.

    The total multiplicity is unchanged. Results are ordered by layer, then
    by the order of the candidates with each positive sign before its negation.
    """
    signed: list[LatticeVector] = []
    for g in candidates:
        signed.extend((g, negate(g)))
    found: list[LayerRepair] = []
    for k, original in enumerate(rel.generators):
        if rel.multiplicities[k] == 0:
            continue
        for g in signed:
            if g == original:
                continue
            generators = rel.generators[:k] + (g,) + rel.generators[k + 1 :]
            trial = Relation(generators=generators, multiplicities=rel.multiplicities)
            if not is_zero(trial.total()):
                continue
            if relation_minimal(trial).minimal:
                found.append(LayerRepair(layer=k, original=original, replacement=g, relation=trial))
    logger.info("repair search: %d replacements restore a minimal relation", len(found))
    return found
