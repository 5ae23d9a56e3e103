"""Exact low-lying spectra, gap curves and scaling sweeps."""

from .anneal import AnnealOperator, OperatorKind, assemble, check_s, full_terms
from .eigensolver import cluster_levels, compile_operator, gaps, lowest_eigs
from .export import (
    SCALING_HEADER,
    gap_curve_header,
    min_gap_summary,
    write_gap_curve,
    write_json,
    write_scaling,
)
from .models import (
    GapCurve,
    GapPoint,
    Level,
    MinGapResult,
    ScalingRow,
    ScalingTable,
    SolverOptions,
)
from .scan import (
    gap_point,
    gap_scan,
    min_gap,
    parse_grid,
    run_pool,
    scaling_sweep,
    sweep_operator,
    uniform_grid,
)

__all__ = [
    "SCALING_HEADER",
    "AnnealOperator",
    "GapCurve",
    "GapPoint",
    "Level",
    "MinGapResult",
    "OperatorKind",
    "ScalingRow",
    "ScalingTable",
    "SolverOptions",
    "assemble",
    "check_s",
    "cluster_levels",
    "compile_operator",
    "full_terms",
    "gap_curve_header",
    "gap_point",
    "gap_scan",
    "gaps",
    "lowest_eigs",
    "min_gap",
    "min_gap_summary",
    "parse_grid",
    "run_pool",
    "scaling_sweep",
    "sweep_operator",
    "uniform_grid",
    "write_gap_curve",
    "write_json",
    "write_scaling",
]
