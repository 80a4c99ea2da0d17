"""Exact arithmetic substrate: Q, Q(i), dense matrices, Laurent polynomials."""

from .gauss import Gauss, I, conj, format_fraction, i_power, to_fraction
from .laurent import LaurentBivar
from .linalg import (
    InconsistentSystem,
    LinearSystemError,
    UnderdeterminedSystem,
    contains,
    det,
    in_span,
    intersect,
    inverse,
    is_positive_definite,
    kernel,
    ldl,
    rank,
    rref,
    same_span,
    solve_linear,
    span_basis,
    span_dim,
)
from .matrix import (
    Matrix,
    dot,
    kron,
    mat_mul,
    matrix_exp_nilpotent,
    nilpotency_index,
    vadd,
    vconj,
    vector,
    vscale,
    vsub,
)

__all__ = [
    "Gauss", "I", "conj", "format_fraction", "i_power", "to_fraction", "LaurentBivar",
    "InconsistentSystem", "LinearSystemError", "UnderdeterminedSystem", "contains", "det",
    "in_span", "intersect", "inverse", "is_positive_definite", "kernel", "ldl", "rank", "rref",
    "same_span", "solve_linear", "span_basis", "span_dim", "Matrix", "kron", "dot", "mat_mul",
    "matrix_exp_nilpotent", "nilpotency_index", "vadd", "vconj", "vector", "vscale", "vsub",
]
