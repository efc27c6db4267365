"""Triangulation-indexed basis of the quasi-symmetric coinvariants.

Triangulations of the (n+3)-gon, Dyck paths of length 2n+2, the recursive
bijection between them, the polynomials ``B_T`` and monomials ``M_D``, and
exact rank certificates against the ideal generated by quasi-symmetric
polynomials without constant term.
"""

from .bijection import (
    PieceDecomposition,
    check_initial_ascent_lemma,
    diagonals_at_star,
    dyck_to_triangulation,
    ext_set,
    split_at_star,
    triangulation_to_dyck,
)
from .combinatorics import (
    DyckPath,
    InvalidDyckPath,
    InvalidTriangulation,
    Negative,
    Positive,
    Triangulation,
    catalan,
    crossing,
    decompose_irreducible,
    enumerate_dyck_paths,
    enumerate_triangulations,
    fan,
    initial_ascent,
    reflect_triangulation,
)
from .polynomial import (
    Polynomial,
    basis_polynomial,
    diagonal_polynomial,
    dyck_monomial,
    leading_monomial,
    lex_compare,
    piece_factorization,
    reverse_variables,
    verify_involution,
    verify_leading_monomials,
    verify_piece_factorization,
)
from .qsym import (
    GradedBasisReport,
    enumerate_compositions,
    ideal_graded_basis,
    monomial_qsym,
    quotient_dimensions,
    verify_basis,
    verify_monomial_basis,
)

__version__ = "0.1.0"

__all__ = [
    "PieceDecomposition",
    "check_initial_ascent_lemma",
    "diagonals_at_star",
    "dyck_to_triangulation",
    "ext_set",
    "split_at_star",
    "triangulation_to_dyck",
    "DyckPath",
    "InvalidDyckPath",
    "InvalidTriangulation",
    "Negative",
    "Positive",
    "Triangulation",
    "catalan",
    "crossing",
    "decompose_irreducible",
    "enumerate_dyck_paths",
    "enumerate_triangulations",
    "fan",
    "initial_ascent",
    "reflect_triangulation",
    "Polynomial",
    "basis_polynomial",
    "diagonal_polynomial",
    "dyck_monomial",
    "leading_monomial",
    "lex_compare",
    "piece_factorization",
    "reverse_variables",
    "verify_involution",
    "verify_leading_monomials",
    "verify_piece_factorization",
    "GradedBasisReport",
    "enumerate_compositions",
    "ideal_graded_basis",
    "monomial_qsym",
    "quotient_dimensions",
    "verify_basis",
    "verify_monomial_basis",
]
