"""Exact linear algebra over Q: rank, kernels and membership."""
from fractions import Fraction as Rat

from ._kernels import backend, set_backend
from .matrix import (
    MODES,
    DimensionError,
    QMatrix,
    arithmetic_mode,
    get_mode,
    in_span,
    kernel_basis,
    kernel_dim,
    pivot_columns,
    rank,
    rref,
    set_mode,
    solve_membership,
)

__all__ = [
    "MODES",
    "DimensionError",
    "QMatrix",
    "Rat",
    "arithmetic_mode",
    "backend",
    "get_mode",
    "in_span",
    "kernel_basis",
    "kernel_dim",
    "pivot_columns",
    "rank",
    "rref",
    "set_backend",
    "set_mode",
    "solve_membership",
]
