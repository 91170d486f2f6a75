"""Binomial representations of Hilbert functions and polynomials for graded
free modules over polynomial rings, with mechanically checked growth,
hyperplane-restriction, persistence, regularity, and Chern-class bounds.

All arithmetic is exact (integers and fractions); no floating point anywhere.
"""

from .chern import ChernData, check_chern_bound, chern_from_hilbert, sum_ij_identity
from .combinatorics import (
    MacaulayRep,
    binomial,
    green_transform,
    macaulay_rep,
    macaulay_transform,
)
from .errors import (
    BudgetExceeded,
    InvariantViolated,
    NonIntegralChern,
    NotAchievable,
    NotAdmissible,
    NotStable,
    PreconditionViolated,
    RankMismatch,
    ZeroModule,
)
from .lex import (
    is_lex_ideal,
    is_lex_piece,
    lex_segment,
    lexify,
    module_monomials,
    saturated_lex_ideal,
    saturated_lex_module,
)
from .monomial_algebra import (
    GradedFreeModule,
    HilbertSeries,
    Monomial,
    MonomialIdeal,
    MonomialSubmodule,
    adjusted_hf_decomposition,
    generic_hyperplane_hf,
    hf_direct,
    hilbert_polynomial,
    hilbert_series,
    ideal_from_dict,
    ideal_to_dict,
    module_from_dict,
    module_to_dict,
    monomial_from_string,
    monomials_of_degree,
    quotient_basis,
    rank,
    saturate,
    stabilization_degree,
)
from .numpoly import (
    AdjustedGotzmannRep,
    EmbeddingDims,
    GotzmannRep,
    NumPoly,
    adjusted_gotzmann_rep,
    binomial_poly,
    gotzmann_number,
    gotzmann_rep,
    grassmannian_embedding_dims,
    poly_from_dict,
    poly_to_dict,
    series_to_polynomial,
)
from .resolution import (
    BettiTable,
    ek_betti_table,
    ek_regularity,
    is_stable,
    koszul_betti,
    regularity,
)
from .theorems import (
    CheckReport,
    check_gasharov,
    check_gotzmann_regularity_adjusted,
    check_green_adjusted,
    check_macaulay_adjusted,
    check_persistence_adjusted,
    check_sharpness,
    random_submodule,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AdjustedGotzmannRep",
    "BettiTable",
    "BudgetExceeded",
    "ChernData",
    "CheckReport",
    "EmbeddingDims",
    "GotzmannRep",
    "GradedFreeModule",
    "HilbertSeries",
    "InvariantViolated",
    "MacaulayRep",
    "Monomial",
    "MonomialIdeal",
    "MonomialSubmodule",
    "NonIntegralChern",
    "NotAchievable",
    "NotAdmissible",
    "NotStable",
    "NumPoly",
    "PreconditionViolated",
    "RankMismatch",
    "ZeroModule",
    "adjusted_gotzmann_rep",
    "adjusted_hf_decomposition",
    "binomial",
    "binomial_poly",
    "check_chern_bound",
    "check_gasharov",
    "check_gotzmann_regularity_adjusted",
    "check_green_adjusted",
    "check_macaulay_adjusted",
    "check_persistence_adjusted",
    "check_sharpness",
    "chern_from_hilbert",
    "ek_betti_table",
    "ek_regularity",
    "generic_hyperplane_hf",
    "gotzmann_number",
    "gotzmann_rep",
    "grassmannian_embedding_dims",
    "green_transform",
    "hf_direct",
    "hilbert_polynomial",
    "hilbert_series",
    "ideal_from_dict",
    "ideal_to_dict",
    "is_lex_ideal",
    "is_lex_piece",
    "is_stable",
    "koszul_betti",
    "lex_segment",
    "lexify",
    "macaulay_rep",
    "macaulay_transform",
    "module_from_dict",
    "module_monomials",
    "module_to_dict",
    "monomial_from_string",
    "monomials_of_degree",
    "poly_from_dict",
    "poly_to_dict",
    "quotient_basis",
    "random_submodule",
    "rank",
    "regularity",
    "saturate",
    "saturated_lex_ideal",
    "saturated_lex_module",
    "series_to_polynomial",
    "stabilization_degree",
    "sum_ij_identity",
    "sweep",
]
