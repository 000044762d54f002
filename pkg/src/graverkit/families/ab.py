"""The family A_{a,b} = (1 1 1 1; 0 a b a+b), 1 <= a < b.

Dividing the second row by gcd(a, b) leaves ker_Z unchanged, so every
construction here works with the coprime pair a' = a/g, b' = b/g.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from ..errors import CertificateFailure
from ..fibers.edges import certificate_for, ugb_member, verify_inequality_certificate
from ..fibers.enumeration import fiber_enumerate
from ..fibers.models import EdgeCertificate
from ..graver.models import GraverBasis
from ..lawrence.faces import lifted_face_minimizers
from ..lawrence.lift import lawrence_lift
from ..lawrence.models import FaceMinimizers, LayeredVector, Relation
from ..lawrence.relations import build_witness, lemma_certificate
from ..linalg.lattice import kernel_lattice_basis, lattice_equal
from ..linalg.matrix import IntMatrix
from ..linalg.vectors import (
    LatticeVector,
    add,
    canonical_order_key,
    canonical_sign,
    negative_part,
    positive_part,
    scale,
)
from ..utils.config import Limits
from .matrices import ab_matrix, staircase_matrix

logger = logging.getLogger(__name__)

H = (1, -1, -1, 1)


class ABInstance(BaseModel):
    """Raw parameters a < b and their coprime normalization."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=1)
    b: int = Field(ge=1)

    @model_validator(mode="after")
    def check_order(self) -> ABInstance:
        if self.a >= self.b:
            raise ValueError(f"A_(a,b) needs 1 <= a < b, got a={self.a}, b={self.b}")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def gcd(self) -> int:
        return math.gcd(self.a, self.b)

    @property
    def a_norm(self) -> int:
        return self.a // self.gcd

    @property
    def b_norm(self) -> int:
        return self.b // self.gcd

    @property
    def normalized(self) -> bool:
        return self.gcd == 1

    @property
    def matrix(self) -> IntMatrix:
        return ab_matrix(self.a, self.b)

    @property
    def normalized_matrix(self) -> IntMatrix:
        return ab_matrix(self.a_norm, self.b_norm)

    @property
    def v(self) -> LatticeVector:
        a, b = self.a_norm, self.b_norm
        return (-b, a + b, 0, -a)

    @property
    def h(self) -> LatticeVector:
        return H

    @property
    def complexity(self) -> int:
        """2(a + b) / gcd(a, b)."""
        return 2 * (self.a_norm + self.b_norm)

    def label(self) -> str:
        return f"A_({self.a},{self.b})"


class UGBWitness(BaseModel):
    """One of the three U(A_{a,b}) members with its hand-written certificate."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    vector: LatticeVector
    functional: tuple[Fraction, ...]
    certificate: EdgeCertificate
    certificate_valid: bool
    lp_member: bool
    fiber: tuple[LatticeVector, ...]
    chain: tuple[LatticeVector, ...] = ()
    chain_valid: bool = True

    @property
    def ok(self) -> bool:
        return self.certificate_valid and self.lp_member and self.chain_valid


class BMatrixReport(BaseModel):
    """G_{a,b} next to B_{a'+b'} and the checks relating them."""

    model_config = ConfigDict(frozen=True)

    g_matrix: IntMatrix
    b_matrix: IntMatrix
    kernels_equal: bool
    factorization_holds: bool


def closed_form_sequence(inst: ABInstance) -> list[LatticeVector]:
    """v, v+h, ..., v+(a'+b')h, h in this order, signs as produced."""
    seq = [add(inst.v, scale(k, H)) for k in range(inst.a_norm + inst.b_norm + 1)]
    seq.append(H)
    return seq


def ab_graver_closed_form(inst: ABInstance) -> GraverBasis:
    """G(A_{a,b}) = +/-{v, v+h, ..., v+(a'+b')h, h}."""
    elements = sorted({canonical_sign(g) for g in closed_form_sequence(inst)}, key=canonical_order_key)
    return GraverBasis(matrix=inst.matrix, elements=tuple(elements))


def _unit(index: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(k == index)) for k in range(4))


def ab_triple_vectors(inst: ABInstance) -> list[tuple[str, LatticeVector, tuple[Fraction, ...]]]:
    """The three members with their certificate functionals.

    (b-1, -a-b+1, 1, a-1) with (a-1)y_3 - y_4 >= 0, (-b, a+b, 0, -a) with
    y_3 >= 0 and (a, 0, -a-b, b) with y_2 >= 0, the last being the image of
    the second under swapping a and b.
    """
    a, b = inst.a_norm, inst.b_norm
    return [
        ("u", (b - 1, -a - b + 1, 1, a - 1), (Fraction(0), Fraction(0), Fraction(a - 1), Fraction(-1))),
        ("v", (-b, a + b, 0, -a), _unit(2)),
        ("w", (a, 0, -a - b, b), _unit(1)),
    ]


def ab_solution_chain(inst: ABInstance) -> list[LatticeVector]:
    """The fiber points of u with y_1 + y_3 = b: (b-a+k, a-1-k, a-k, k) for k = 0, ..., a-1.

    The only other point of the fiber is u- = (0, a+b-1, 0, 0). The last chain
    point is u+, the only one on which (a-1)y_3 - y_4 vanishes.
    """
    a, b = inst.a_norm, inst.b_norm
    return [(b - a + k, a - 1 - k, a - k, k) for k in range(a)]


def ab_ugb_triple(inst: ABInstance, limits: Limits | None = None, strict: bool = False) -> list[UGBWitness]:
    """Check each member's certificate on its fiber and confirm membership by LP.

    The fiber of u is also compared with its solution chain. With strict, a
    failing check raises CertificateFailure.
    """
    matrix = inst.normalized_matrix
    out = []
    for name, z, functional in ab_triple_vectors(inst):
        top, bottom = positive_part(z), negative_part(z)
        fiber = fiber_enumerate(matrix, matrix.apply(top), limits)
        valid = verify_inequality_certificate(fiber, functional, (top, bottom))
        lp = ugb_member(matrix, z, limits)
        chain: tuple[LatticeVector, ...] = ()
        chain_valid = True
        if name == "u":
            chain = tuple(ab_solution_chain(inst))
            chain_valid = chain[-1] == top and set(fiber.points) == {*chain, bottom}
        if strict and not (valid and lp.member):
            raise CertificateFailure(f"{inst.label()}: certificate for {z} does not define the edge")
        if strict and not chain_valid:
            raise CertificateFailure(f"{inst.label()}: the fiber of {z} is not the solution chain")
        out.append(
            UGBWitness(
                name=name,
                vector=z,
                functional=functional,
                certificate=certificate_for(fiber, functional),
                certificate_valid=valid,
                lp_member=lp.member,
                fiber=fiber.points,
                chain=chain,
                chain_valid=chain_valid,
            )
        )
        logger.debug("%s %s: certificate %s, LP %s", inst.label(), z, valid, lp.member)
    return out


def ab_relation(inst: ABInstance) -> Relation:
    """(a+b) u + (a+b-1) v + 1 w = 0."""
    s = inst.a_norm + inst.b_norm
    vectors = [z for _, z, _ in ab_triple_vectors(inst)]
    return Relation(generators=tuple(vectors), multiplicities=(s, s - 1, 1))


def b_matrix(inst: ABInstance) -> BMatrixReport:
    """G_{a,b} (closed-form columns) and B_{a'+b'}, with G = (v h) B and equal kernels."""
    columns = closed_form_sequence(inst)
    g = IntMatrix.from_columns(columns)
    b = staircase_matrix(inst.a_norm + inst.b_norm)
    vh = IntMatrix.from_columns([inst.v, H])
    product = tuple(
        tuple(sum(vh.entries[i][k] * b.entries[k][j] for k in range(2)) for j in range(b.cols))
        for i in range(4)
    )
    equal = lattice_equal(kernel_lattice_basis(g), kernel_lattice_basis(b))
    return BMatrixReport(
        g_matrix=g, b_matrix=b, kernels_equal=equal, factorization_holds=product == g.entries
    )


def ab_lifted_witness(inst: ABInstance, limits: Limits | None = None) -> tuple[LayeredVector, FaceMinimizers]:
    """The 2(a'+b')-layer witness and the minimizers of its concatenated certificate.

    A minimizer count of 2 (the witness's own positive and negative parts)
    shows the witness is an edge direction of its lifted fiber.
    """
    rel = ab_relation(inst)
    witness = build_witness(rel)
    certificates = [w.certificate for w in ab_ugb_triple(inst, limits)]
    functional = lemma_certificate(rel, certificates)
    lift = lawrence_lift(inst.normalized_matrix, rel.norm)
    rhs = lift.matrix.apply(positive_part(witness.flat))
    return witness, lifted_face_minimizers(lift, rhs, functional, cap=4, limits=limits)
