"""Exact structural analysis of short linear codes over small finite fields.

The package decides, for codes of length up to ~24 over GF(q) with q <= 1024,
whether they are MDS, Griesmer, perfect, self-dual, completely regular and/or
uniformly packed in the wide sense, with every quantity computed exactly
(integer enumeration plus rational elimination).  A registry of classification
claims (C1..C18) ties the engines to concrete verifiable statements; the
``codescope`` CLI exposes everything.
"""

from .caps import CapExceeded, CostBudget, budget
from .claims import CLAIMS, ClaimResult, run_claims
from .classify import (
    ClassificationReport,
    classify_mds,
    dual_classification_bijection,
    enumerate_mds_systematic,
    equivalence_classes,
    verify_no_mds,
)
from .code import (
    CodeProfile,
    LinearCode,
    a_d_formula,
    bounds_flags,
    direct_sum,
    format_code_text,
    griesmer_sum,
    krawtchouk,
    macwilliams,
    parse_code_text,
    read_code_file,
    write_code_file,
)
from .constructions import (
    ders,
    dual_repetition,
    hamming,
    hyperoval_code,
    preset_matrix,
    repetition,
    rs_code,
    self_dual_2_1_2,
    self_dual_4_2_3,
    self_dual_search,
    simplex,
    standard_corpus,
)
from .coset import (
    AnalysisResult,
    CosetTable,
    coset_distribution,
    coset_weight_distributions,
    covering_radius,
    coset_leader_weights,
    full_profile,
    is_completely_regular,
    is_upws,
    lemma_implications,
    solve_packing_coefficients,
)
from .gf import GF, FieldError, count_diagonal_quadratic, field, field_of_order
from .linalg import Matrix

__version__ = "0.1.0"

__all__ = [
    "AnalysisResult", "CapExceeded", "ClaimResult", "ClassificationReport",
    "CodeProfile", "CosetTable", "CostBudget", "FieldError", "GF", "LinearCode",
    "Matrix", "CLAIMS", "a_d_formula", "bounds_flags", "budget", "classify_mds",
    "coset_distribution", "coset_leader_weights", "coset_weight_distributions",
    "count_diagonal_quadratic", "covering_radius", "ders", "direct_sum",
    "dual_classification_bijection", "dual_repetition", "enumerate_mds_systematic",
    "equivalence_classes", "field", "field_of_order", "format_code_text",
    "full_profile", "griesmer_sum", "hamming", "hyperoval_code",
    "is_completely_regular", "is_upws", "krawtchouk", "lemma_implications",
    "macwilliams", "parse_code_text", "preset_matrix", "read_code_file",
    "repetition", "rs_code", "run_claims", "self_dual_2_1_2", "self_dual_4_2_3",
    "self_dual_search", "simplex", "solve_packing_coefficients",
    "standard_corpus", "verify_no_mds", "write_code_file",
]
