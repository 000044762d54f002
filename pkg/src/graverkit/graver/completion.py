"""Graver bases by completion on ker_Z(A).

The procedure starts from a lattice basis and its negatives, forms sums of
pairs, reduces each sum by sign-compatible subtraction of smaller elements
and keeps the irreducible remainders, until every pair sum reduces to zero.
The ⊑-minimal elements of the final set are the Graver basis.
"""

from __future__ import annotations

import heapq
import logging
from array import array
from collections.abc import Iterator, Sequence

from ..errors import ResourceLimitExceeded
from ..linalg.lattice import kernel_lattice_basis
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import (
    LatticeVector,
    canonical_order_key,
    canonical_sign,
    conformal_leq,
    is_zero,
    negate,
    norm1,
    sign_masks,
)
from ..utils.config import DEFAULT_LIMITS, Limits
from .models import GraverBasis

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 50_000


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class ReducerIndex:
    """Symmetric set of lattice vectors grouped by sign pattern.

    Answers "is there g in the set with g ⊑ s" quickly: only groups whose
    positive and negative masks fit inside those of s can hold a reducer.
    """

    def __init__(self) -> None:
        self._groups: dict[tuple[int, int], list[LatticeVector]] = {}
        self._count = 0

    def __len__(self) -> int:
        return self._count

    def add(self, g: LatticeVector) -> None:
        """Insert g and -g."""
        p, n = sign_masks(g)
        self._groups.setdefault((p, n), []).append(g)
        self._groups.setdefault((n, p), []).append(negate(g))
        self._count += 1

    def find_reducer(
        self, s: Sequence[int], masks: tuple[int, int] | None = None, exclude: bool = False
    ) -> LatticeVector | None:
        """Some g ⊑ s from the set; with exclude, g == s itself does not count."""
        sp, sn = masks if masks is not None else sign_masks(s)
        support_bits = (sp | sn).bit_count()
        if len(self._groups) <= (1 << support_bits):
            for (gp, gn), members in self._groups.items():
                if gp & ~sp or gn & ~sn:
                    continue
                found = self._scan(members, s, exclude)
                if found is not None:
                    return found
            return None
        for gp in _submasks(sp):
            for gn in _submasks(sn):
                members = self._groups.get((gp, gn))
                if not members:
                    continue
                found = self._scan(members, s, exclude)
                if found is not None:
                    return found
        return None

    @staticmethod
    def _scan(members: list[LatticeVector], s: Sequence[int], exclude: bool) -> LatticeVector | None:
        for g in members:
            if exclude and g == tuple(s):
                continue
            if conformal_leq(g, s):
                return g
        return None

    def normal_form(self, s: Sequence[int]) -> LatticeVector:
        """Subtract sign-compatible smaller elements until none fits."""
        current = tuple(s)
        while not is_zero(current):
            g = self.find_reducer(current)
            if g is None:
                break
            current = tuple(a - b for a, b in zip(current, g, strict=True))
        return current


class _PairQueue:
    """Pairs (i, j, sign) bucketed by the 1-norm of r_i +/- r_j.

    Lowest bucket first, FIFO inside a bucket. Pairs are packed into
    machine integers so the queue stays compact for large runs.
    """

    def __init__(self) -> None:
        self._buckets: dict[int, array] = {}
        self._cursor: dict[int, int] = {}
        self._heap: list[int] = []
        self.pending = 0

    def push(self, norm: int, i: int, j: int, sign: int) -> None:
        bucket = self._buckets.get(norm)
        if bucket is None:
            bucket = self._buckets[norm] = array("q")
            self._cursor[norm] = 0
            heapq.heappush(self._heap, norm)
        bucket.append(((i << 31 | j) << 1) | sign)
        self.pending += 1

    def pop(self) -> tuple[int, int, int] | None:
        while self._heap:
            norm = self._heap[0]
            bucket = self._buckets[norm]
            pos = self._cursor[norm]
            if pos < len(bucket):
                self._cursor[norm] = pos + 1
                self.pending -= 1
                packed = bucket[pos]
                return packed >> 32, (packed >> 1) & 0x7FFFFFFF, packed & 1
            heapq.heappop(self._heap)
            del self._buckets[norm]
            del self._cursor[norm]
        return None


class GraverCompletion:
    """State of one completion run."""

    def __init__(self, width: int, limits: Limits) -> None:
        self.width = width
        self.limits = limits
        self.reps: list[LatticeVector] = []
        self.masks: list[tuple[int, int]] = []
        self.index = ReducerIndex()
        self.queue = _PairQueue()
        self.pairs_done = 0

    def insert(self, g: LatticeVector) -> None:
        """Add a new representative and queue its pairs with all earlier ones."""
        if len(self.reps) >= self.limits.max_elements:
            raise ResourceLimitExceeded(
                "max_elements", self.limits.max_elements, f"{self.queue.pending} pairs pending"
            )
        j = len(self.reps)
        gp, gn = sign_masks(g)
        for i, (ip, ineg) in enumerate(self.masks):
            r = self.reps[i]
            # r_i + g is reducible by r_i when the two are sign-compatible
            if ip & gn or ineg & gp:
                self.queue.push(sum(abs(a + b) for a, b in zip(r, g, strict=True)), i, j, 0)
            if ip & gp or ineg & gn:
                self.queue.push(sum(abs(a - b) for a, b in zip(r, g, strict=True)), i, j, 1)
        self.reps.append(g)
        self.masks.append((gp, gn))
        self.index.add(g)

    def run(self) -> None:
        while True:
            item = self.queue.pop()
            if item is None:
                break
            i, j, sign = item
            ri, rj = self.reps[i], self.reps[j]
            if sign:
                s = tuple(a - b for a, b in zip(ri, rj, strict=True))
            else:
                s = tuple(a + b for a, b in zip(ri, rj, strict=True))
            f = self.index.normal_form(s)
            self.pairs_done += 1
            if self.pairs_done % PROGRESS_EVERY == 0:
                logger.info(
                    "completion: %d pairs reduced, %d elements, %d pending",
                    self.pairs_done,
                    len(self.reps),
                    self.queue.pending,
                )
            if is_zero(f):
                continue
            size = norm1(f)
            if size > self.limits.max_norm:
                raise ResourceLimitExceeded("max_norm", self.limits.max_norm, f"element of norm {size}")
            self.insert(canonical_sign(f))

    def minimal(self) -> list[LatticeVector]:
        """The ⊑-minimal representatives, canonically sorted."""
        keep = []
        for g, masks in zip(self.reps, self.masks, strict=True):
            if self.index.find_reducer(g, masks, exclude=True) is None:
                keep.append(g)
        return sorted(keep, key=canonical_order_key)


def graver(matrix: IntMatrix, limits: Limits | None = None) -> GraverBasis:
    """Graver basis of ker_Z(matrix): all ⊑-minimal nonzero kernel elements."""
    limits = limits or DEFAULT_LIMITS
    basis = kernel_lattice_basis(matrix)
    if not basis:
        return GraverBasis(matrix=matrix, elements=())
    logger.info("graver: %dx%d matrix, lattice rank %d", matrix.rows, matrix.cols, len(basis))
    state = GraverCompletion(matrix.cols, limits)
    for b in sorted({canonical_sign(b) for b in basis}, key=canonical_order_key):
        state.insert(b)
    state.run()
    elements = state.minimal()
    logger.info(
        "graver: %d pairs reduced, %d candidates, %d Graver pairs",
        state.pairs_done,
        len(state.reps),
        len(elements),
    )
    return GraverBasis(matrix=matrix, elements=tuple(elements))
