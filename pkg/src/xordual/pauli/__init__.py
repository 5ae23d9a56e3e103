"""Pauli-string algebra and matrix-free operators."""

from .algebra import (
    commutes,
    dense_matrix,
    expectation_sector,
    format_term,
    format_terms,
    multiply,
    parse_terms,
    string_matrix,
)
from .models import PauliString, Term, TermSum
from .operator import ParitySector, PauliOperator, apply, z_signs

__all__ = [
    "ParitySector",
    "PauliOperator",
    "PauliString",
    "Term",
    "TermSum",
    "apply",
    "commutes",
    "dense_matrix",
    "expectation_sector",
    "format_term",
    "format_terms",
    "multiply",
    "parse_terms",
    "string_matrix",
    "z_signs",
]
