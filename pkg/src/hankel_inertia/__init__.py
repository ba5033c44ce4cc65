"""Inertia of finite-rank self-adjoint Hankel operators.

The closed form counts positive and negative eigenvalues from the degrees
and leading coefficients of h(t) = sum P_m(t) exp(-alpha_m t); everything
else in the package exists to check it independently or to move between
representations of the same operator.
"""
__version__ = "0.1.0"

from .automorphisms import Automorphism, circle_dilation, dilate_kernel, dilate_line_symbol, involute_line_symbol, sequence_parity
from .carleman import TruncationExperiment, carleman_element, negative_count_experiment, truncated_matrix
from .errors import (
    DegenerateLeading,
    DimensionMismatch,
    DomainError,
    HankelError,
    IllConditioned,
    InconsistentCounts,
    InvalidExponent,
    InvalidSymbol,
    MalformedSpec,
    NonHermitian,
    NotReal,
    NotSelfAdjoint,
    NotSignMatrix,
    PoleOnBoundary,
    ShapeViolation,
    SingularBlock,
    SingularSkewDiagonal,
)
from .inertia import (
    InertiaReport,
    kernel_inertia,
    numeric_inertia,
    pair_block_inertia,
    perturbed_negative_count,
    real_term_counts,
    sign_matrix_inertia,
    skew_diagonal_inertia,
    skew_triangular_inertia,
)
from .kernel import HankelKernel, KernelTerm, canonicalize, kernel, leading_coefficients, rank
from .oracle import gram_matrix, nonzero_spectrum, oracle_inertia, separable_expansion
from .representations import (
    CircleSymbol,
    CircleTerm,
    GeometricTerm,
    LineSymbol,
    LineTerm,
    SequenceRep,
    circle_to_line,
    circle_to_sequence,
    convert,
    inertia_in_representation,
    kernel_to_line_symbol,
    line_symbol_to_kernel,
    line_to_circle,
    sequence_element,
    sequence_to_circle,
)
from .scalars import ComplexScalar, Polynomial
from .sign import (
    q_coefficients,
    recover_polynomial,
    sign_distribution,
    sign_matrix,
    sign_matrix_pair,
    sign_matrix_real,
    sign_matrix_to_kernel,
)

__all__ = [
    "__version__",
    "Automorphism",
    "CircleSymbol",
    "CircleTerm",
    "ComplexScalar",
    "DegenerateLeading",
    "DimensionMismatch",
    "DomainError",
    "GeometricTerm",
    "HankelError",
    "HankelKernel",
    "IllConditioned",
    "InconsistentCounts",
    "InertiaReport",
    "InvalidExponent",
    "InvalidSymbol",
    "KernelTerm",
    "LineSymbol",
    "LineTerm",
    "MalformedSpec",
    "NonHermitian",
    "NotReal",
    "NotSelfAdjoint",
    "NotSignMatrix",
    "PoleOnBoundary",
    "Polynomial",
    "SequenceRep",
    "ShapeViolation",
    "SingularBlock",
    "SingularSkewDiagonal",
    "TruncationExperiment",
    "canonicalize",
    "carleman_element",
    "circle_dilation",
    "circle_to_line",
    "circle_to_sequence",
    "convert",
    "dilate_kernel",
    "dilate_line_symbol",
    "gram_matrix",
    "inertia_in_representation",
    "involute_line_symbol",
    "kernel",
    "kernel_inertia",
    "kernel_to_line_symbol",
    "leading_coefficients",
    "line_symbol_to_kernel",
    "line_to_circle",
    "negative_count_experiment",
    "nonzero_spectrum",
    "numeric_inertia",
    "oracle_inertia",
    "pair_block_inertia",
    "perturbed_negative_count",
    "q_coefficients",
    "rank",
    "real_term_counts",
    "recover_polynomial",
    "separable_expansion",
    "sequence_element",
    "sequence_parity",
    "sequence_to_circle",
    "sign_distribution",
    "sign_matrix",
    "sign_matrix_inertia",
    "sign_matrix_pair",
    "sign_matrix_real",
    "sign_matrix_to_kernel",
    "skew_diagonal_inertia",
    "skew_triangular_inertia",
    "truncated_matrix",
]
