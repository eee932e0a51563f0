"""Finite-field homology engine used to verify the closed forms."""
from .bases import MonomialBasis, functor_basis
from .checks import (
    cartier_check,
    cartier_expected,
    kernel_cokernel_dims,
    lemma22_split_check,
    lemma43_check,
    lemma43_tables,
    mult_comult_matrix,
)
from .complexes import (
    ChainComplexFp,
    GradedLinearMap,
    Term,
    build_complex,
    derham,
    dual_koszul,
    gen_koszul,
    graded_homology,
    homology_dims,
    koszul,
)
from .linalg import FpMatrix, rank_mod_p

__all__ = [
    "ChainComplexFp", "FpMatrix", "GradedLinearMap", "MonomialBasis", "Term",
    "build_complex", "cartier_check", "cartier_expected", "derham", "dual_koszul",
    "functor_basis", "gen_koszul", "graded_homology", "homology_dims",
    "kernel_cokernel_dims", "koszul", "lemma22_split_check", "lemma43_check",
    "lemma43_tables", "mult_comult_matrix", "rank_mod_p",
]
