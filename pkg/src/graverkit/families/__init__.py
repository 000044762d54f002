"""Matrix families: transportation tables, A_{a,b}, A_n and their closed forms."""

from .ab import (
    ABInstance,
    BMatrixReport,
    UGBWitness,
    ab_graver_closed_form,
    ab_lifted_witness,
    ab_relation,
    ab_solution_chain,
    ab_triple_vectors,
    ab_ugb_triple,
    b_matrix,
    closed_form_sequence,
)
from .matrices import a_n_matrix, ab_matrix, staircase_matrix, transportation_matrix

__all__ = [
    "ABInstance",
    "BMatrixReport",
    "UGBWitness",
    "a_n_matrix",
    "ab_graver_closed_form",
    "ab_lifted_witness",
    "ab_matrix",
    "ab_relation",
    "ab_solution_chain",
    "ab_triple_vectors",
    "ab_ugb_triple",
    "b_matrix",
    "closed_form_sequence",
    "staircase_matrix",
    "transportation_matrix",
]
