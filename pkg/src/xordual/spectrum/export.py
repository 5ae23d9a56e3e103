"""CSV and JSON output of gap curves, minimum gaps and scaling tables."""

import csv
import json
import logging
from pathlib import Path
from typing import Any

from .models import GapCurve, MinGapResult, ScalingTable

logger = logging.getLogger(__name__)

SCALING_HEADER = ["family", "g", "N", "M", "r", "q", "s_star", "min_gap", "solver_tol"]


def gap_curve_header(k: int) -> list[str]:
    return ["s", *(f"E{i}" for i in range(k)), "gap", "gap_degenaware"]


def write_gap_curve(curve: GapCurve, path: str | Path) -> None:
    """Columns ``s,E0..E{k-1},gap,gap_degenaware``; missing eigenvalues are left empty."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(gap_curve_header(curve.k))
        for point in curve.points:
            values = [repr(v) for v in point.eigenvalues]
            values += [""] * (curve.k - len(values))
            writer.writerow([repr(point.s), *values, repr(point.gap), repr(point.gap_degenaware)])
    logger.info("[Spectrum] Wrote %d gap points to %s", len(curve), path)


def write_scaling(table: ScalingTable, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(SCALING_HEADER)
        for row in table.rows:
            writer.writerow(
                [
                    row.family,
                    row.g,
                    row.n_spins,
                    row.n_edges,
                    row.r,
                    row.q,
                    repr(row.s_star),
                    repr(row.min_gap),
                    repr(row.solver_tol),
                ]
            )
    logger.info("[Spectrum] Wrote %d scaling rows to %s", len(table), path)


def min_gap_summary(result: MinGapResult, **extra: Any) -> dict[str, Any]:
    return {**result.model_dump(), **extra}


def write_json(data: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
