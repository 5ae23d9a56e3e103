"""Gap curves over s, minimum-gap refinement and finite-size scaling sweeps."""

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

import numpy as np
from scipy.optimize import minimize_scalar

from ..duality.transform import dualize, parse_sector
from ..utils.errors import BadSError, BudgetExceededError, ConfigError
from ..xorsat.generators import generate
from ..xorsat.models import Family
from .anneal import AnnealOperator
from .eigensolver import compile_operator, gaps, lowest_eigs
from .models import GapCurve, GapPoint, MinGapResult, ScalingRow, ScalingTable, SolverOptions

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_pool(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """Map ``func`` over ``items`` in submission order, in a process pool when workers > 1."""
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(func, items))


def uniform_grid(points: int, start: float = 0.0, stop: float = 1.0) -> list[float]:
    """``points`` equally spaced values from ``start`` to ``stop`` inclusive."""
    if points < 1:
        return []
    if points == 1:
        return [start]
    return [float(x) for x in np.linspace(start, stop, points)]


def parse_grid(spec: str) -> list[float]:
    """Parse ``start:stop:points`` or a comma-separated list of s values.

    Raises:
        ConfigError: On a malformed spec.
    """
    try:
        if ":" in spec:
            start, stop, points = spec.split(":")
            return uniform_grid(int(points), float(start), float(stop))
        return [float(v) for v in spec.split(",") if v.strip()]
    except ValueError as e:
        raise ConfigError(f"Bad grid {spec!r}; use start:stop:points or a list") from e


def _check_grid(grid: Sequence[float]) -> None:
    for s in grid:
        if not 0.0 <= s <= 1.0:
            raise BadSError(f"Grid point s={s} outside [0, 1]", s=s)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("Grid must be strictly ascending")


def gap_point(op: AnnealOperator, s: float, k: int, options: SolverOptions) -> GapPoint:
    """Lowest ``k`` eigenvalues at ``s``; ``k`` grows until a level above E0 shows up."""
    compiled = compile_operator(op.terms(s), op.parity)
    want = max(k, 2)
    while True:
        values = lowest_eigs(compiled, want, options)
        plain, aware = gaps(values, options.degeneracy_tol)
        if not math.isnan(aware) or want >= compiled.dim:
            break
        want = min(2 * want, compiled.dim)
    logger.debug("[Spectrum] s=%.4f E0=%.10f gap=%.10f", s, values[0], aware)
    return GapPoint(
        s=s,
        eigenvalues=tuple(float(v) for v in values[:k]),
        gap=plain,
        gap_degenaware=aware,
    )


class _PointTask:
    """Picklable closure over the operator for the worker pool."""

    def __init__(self, op: AnnealOperator, k: int, options: SolverOptions):
        self.op = op
        self.k = k
        self.options = options

    def __call__(self, s: float) -> GapPoint:
        return gap_point(self.op, s, self.k, self.options)


def gap_scan(
    op: AnnealOperator,
    grid: Sequence[float],
    k: int = 2,
    options: SolverOptions | None = None,
    workers: int = 1,
) -> GapCurve:
    """Evaluate the lowest ``k`` eigenvalues and both gap variants on every grid point.

    Raises:
        BadSError: If a grid point lies outside [0, 1].
        ConfigError: If the grid is not ascending.
    """
    options = options or SolverOptions()
    _check_grid(grid)
    points = run_pool(_PointTask(op, k, options), list(grid), workers)
    logger.info("[Spectrum] Scanned %s on %d points", op.label, len(points))
    return GapCurve(label=op.label, k=k, points=tuple(points))


def min_gap(
    curve: GapCurve,
    op: AnnealOperator,
    refine_tol: float = 1e-4,
    options: SolverOptions | None = None,
) -> MinGapResult:
    """Refine the grid minimum of the degeneracy-aware gap by golden-section search.

    An interior minimum is refined inside its bracketing neighbours; a minimum at
    either end of the grid is refined by bounded search on the adjacent interval.

    Raises:
        ConfigError: If the curve is empty.
    """
    if not curve.points:
        raise ConfigError("Cannot locate the minimum gap of an empty curve")
    options = options or SolverOptions()
    s_values = curve.s_values
    i = curve.argmin()
    grid_s, grid_gap = s_values[i], curve.gaps[i]
    if len(s_values) == 1:
        return MinGapResult(
            s_star=grid_s,
            min_gap=grid_gap,
            grid_s=grid_s,
            grid_gap=grid_gap,
            refine_tol=refine_tol,
            solver_tol=options.tol,
            evaluations=0,
        )

    evaluations = 0

    def gap_at(s: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return gap_point(op, float(np.clip(s, 0.0, 1.0)), 2, options).gap_degenaware

    result = None
    if 0 < i < len(s_values) - 1:
        bracket = (s_values[i - 1], grid_s, s_values[i + 1])
        try:
            result = minimize_scalar(
                gap_at, bracket=bracket, method="golden", tol=refine_tol / (2.0 * grid_s)
            )
        except ValueError:
            # flat bracket: fall through to the bounded search
            result = None
        if result is not None and not bracket[0] <= result.x <= bracket[2]:
            result = None
        bounds = (bracket[0], bracket[2])
    elif i == 0:
        bounds = (s_values[0], s_values[1])
    else:
        bounds = (s_values[-2], s_values[-1])

    if result is None:
        result = minimize_scalar(
            gap_at, bounds=bounds, method="bounded", options={"xatol": refine_tol}
        )

    s_star, value = float(result.x), float(result.fun)
    if not value < grid_gap:
        s_star, value = grid_s, grid_gap
    logger.info("[Spectrum] %s: min gap %.8f at s=%.5f", curve.label, value, s_star)
    return MinGapResult(
        s_star=s_star,
        min_gap=value,
        grid_s=grid_s,
        grid_gap=grid_gap,
        refine_tol=refine_tol,
        solver_tol=options.tol,
        evaluations=evaluations,
    )


def sweep_operator(
    family: Family, g: int, sector: str = "all-plus"
) -> tuple[AnnealOperator, ScalingRow]:
    """The sector operator used for one sweep entry and a row template.

    ``sector`` is resolved against each instance with :func:`parse_sector`, so
    ``all-plus`` and ``flip:...`` carry over between sizes.

    Raises:
        ConfigError: If the policy names more than one sector.
    """
    inst = generate(family, g)
    dm = dualize(inst)
    resolved = parse_sector(sector, dm)
    if len(resolved) != 1:
        raise ConfigError(f"A sweep needs exactly one sector, {sector!r} gives {len(resolved)}")
    (sector_spec,) = resolved
    if dm.product_terms():
        op = AnnealOperator.embedded(dm, sector_spec)
    else:
        op = AnnealOperator.dual(dm, sector_spec)
    row = ScalingRow(
        family=family,
        g=g,
        n_spins=inst.n_spins,
        n_edges=inst.n_edges,
        r=dm.r,
        q=dm.q,
        sector=sector_spec.values,
        sites=op.n_sites,
        s_star=math.nan,
        min_gap=math.nan,
        solver_tol=0.0,
    )
    return op, row


def scaling_sweep(
    family: Family,
    g_values: Iterable[int],
    grid: Sequence[float],
    k: int = 2,
    options: SolverOptions | None = None,
    refine_tol: float = 1e-4,
    max_sites: int = 22,
    workers: int = 1,
    sector: str = "all-plus",
) -> ScalingTable:
    """Minimum gap of one sector for each generation count.

    ``sector`` is a policy such as ``all-plus`` or ``flip:1``, resolved per size.
    Duals with a product term are embedded and solved at parity +1.

    Raises:
        BudgetExceededError: If some entry would diagonalize more than ``max_sites`` sites.
        BadSectorError: If an explicit sector list does not fit some size.
    """
    options = options or SolverOptions()
    prepared = [sweep_operator(family, g, sector) for g in g_values]
    for _, row in prepared:
        if row.sites > max_sites:
            raise BudgetExceededError(
                f"{family}(g={row.g}) needs {row.sites} sites, the limit is {max_sites}",
                sites=row.sites,
                limit=max_sites,
            )

    rows = []
    for op, row in prepared:
        curve = gap_scan(op, grid, k, options, workers)
        best = min_gap(curve, op, refine_tol, options)
        rows.append(
            row.model_copy(
                update={"s_star": best.s_star, "min_gap": best.min_gap, "solver_tol": options.tol}
            )
        )
    table = ScalingTable(rows=tuple(rows))
    logger.info("[Spectrum] Scaling sweep %s over %d sizes", family, len(rows))
    return table
