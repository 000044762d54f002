"""Exact integer linear algebra: matrices, lattices, rational feasibility."""

from .lattice import (
    hermite_normal_form,
    is_unimodular,
    kernel_lattice_basis,
    lattice_contains,
    lattice_equal,
    rank,
)
from .matrix import IntMatrix, format_matrix, parse_matrix, parse_vector, read_matrix, read_vector
from .simplex import LinearSystem, find_feasible_point
from .vectors import LatticeVector

__all__ = [
    "IntMatrix",
    "LatticeVector",
    "LinearSystem",
    "find_feasible_point",
    "format_matrix",
    "hermite_normal_form",
    "is_unimodular",
    "kernel_lattice_basis",
    "lattice_contains",
    "lattice_equal",
    "parse_matrix",
    "parse_vector",
    "rank",
    "read_matrix",
    "read_vector",
]
