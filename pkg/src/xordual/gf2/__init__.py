"""GF(2) linear algebra module."""

from .codec import format_matrix, parse_matrix, read_matrix, write_matrix
from .linalg import (
    in_row_space,
    inverse,
    kernel_basis,
    left_inverse,
    nullspace,
    pivot_columns,
    rank2,
    row_basis,
    solve2,
)
from .models import BitMatrix, BitVector, RowBasis, SolveResult, iter_bits

__all__ = [
    "BitMatrix",
    "BitVector",
    "RowBasis",
    "SolveResult",
    "format_matrix",
    "in_row_space",
    "inverse",
    "iter_bits",
    "kernel_basis",
    "left_inverse",
    "nullspace",
    "parse_matrix",
    "pivot_columns",
    "rank2",
    "read_matrix",
    "row_basis",
    "solve2",
    "write_matrix",
]
