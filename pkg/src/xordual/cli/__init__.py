"""Batch command-line front end."""

from ..duality.transform import parse_sector
from .commands import CommandRunner, parse_basis, parse_g_values
from .parser import build_parser

__all__ = ["CommandRunner", "build_parser", "parse_basis", "parse_g_values", "parse_sector"]
