"""Higher Lawrence liftings, layered witnesses and minimal relations."""

from .faces import lifted_face_minimizers
from .lift import format_layered, in_lifted_kernel, lawrence_lift, parse_layered, type_of
from .models import FaceMinimizers, LawrenceLift, LayeredVector, MinimalityResult, Relation
from .relations import build_witness, lemma_certificate, relation_minimal, search_space

__all__ = [
    "FaceMinimizers",
    "LawrenceLift",
    "LayeredVector",
    "MinimalityResult",
    "Relation",
    "build_witness",
    "format_layered",
    "in_lifted_kernel",
    "lawrence_lift",
    "lemma_certificate",
    "lifted_face_minimizers",
    "parse_layered",
    "relation_minimal",
    "search_space",
    "type_of",
]
