"""Subcommand implementations; each returns the process exit status."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

import numpy as np

from ..config.settings import Settings
from ..duality.models import SectorSpec
from ..duality.transform import dualize, dump_header, parse_sector, restrict
from ..gf2.linalg import solve2
from ..gf2.models import BitVector
from ..pauli.algebra import format_terms
from ..spectrum.anneal import AnnealOperator
from ..spectrum.export import min_gap_summary, write_gap_curve, write_json, write_scaling
from ..spectrum.models import SolverOptions
from ..spectrum.scan import gap_scan, min_gap, parse_grid, scaling_sweep, uniform_grid
from ..utils.errors import ConfigError
from ..verify.suites import run_suite
from ..xorsat.analysis import brute_force_classical, from_assignment, gauge_reduce, leaf_removal
from ..xorsat.generators import generate, make_couplings, with_couplings
from ..xorsat.io import format_instance, read_instance
from ..xorsat.models import Instance

logger = logging.getLogger(__name__)


def parse_g_values(spec: str) -> list[int]:
    """``1..3`` (inclusive range) or ``1,2,4``."""
    try:
        if ".." in spec:
            low, high = spec.split("..")
            return list(range(int(low), int(high) + 1))
        return [int(v) for v in spec.split(",") if v.strip()]
    except ValueError as e:
        raise ConfigError(f"Bad generation list {spec!r}; use 1..3 or 1,2,4") from e


def parse_basis(spec: str) -> list[int]:
    """1-based edge list ``2,3,4`` to 0-based indices."""
    try:
        return [int(v) - 1 for v in spec.split(",") if v.strip()]
    except ValueError as e:
        raise ConfigError(f"Bad basis {spec!r}; use 1-based edge numbers such as 2,3,4") from e


def _sector_path(path: str, sector: SectorSpec, many: bool) -> Path:
    p = Path(path)
    if not many:
        return p
    return p.with_name(f"{p.stem}_sector{sector.index}{p.suffix}")


class CommandRunner:
    """Runs one subcommand with resolved settings."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or Settings()
        self.options = SolverOptions.from_settings(self.settings)

    def _emit(self, text: str, path: str | None) -> None:
        if path is None:
            sys.stdout.write(text)
            return
        Path(path).write_text(text, encoding="utf-8")
        logger.info("[CLI] Wrote %s", path)

    def _emit_json(self, data: dict[str, Any], path: str | None) -> None:
        data = {**data, "settings": self.settings.model_dump()}
        if path is None:
            sys.stdout.write(json.dumps(data, indent=2) + "\n")
            return
        write_json(data, path)
        logger.info("[CLI] Wrote %s", path)

    def resolve_instance(self, args: argparse.Namespace) -> Instance:
        """Instance from a file, or from ``--family``/``--g`` plus a coupling spec.

        Raises:
            ConfigError: If neither or both sources are given.
        """
        if args.instance is not None and args.family is not None:
            raise ConfigError("Give an instance file or --family/--g, not both")
        if args.instance is not None:
            return read_instance(args.instance)
        if args.family is None or args.g is None:
            raise ConfigError("An instance file or --family and --g is required")
        inst = generate(args.family, args.g)
        if args.couplings != "all-plus":
            inst = with_couplings(inst, make_couplings(inst, args.couplings, self.settings.seed))
        return inst

    def _grid(self, spec: str | None) -> list[float]:
        return parse_grid(spec) if spec else uniform_grid(self.settings.grid_points)

    def gen(self, args: argparse.Namespace) -> int:
        inst = generate(args.family, args.g)
        inst = with_couplings(inst, make_couplings(inst, args.couplings, self.settings.seed))
        logger.info("[CLI] Generated %s", inst.describe())
        self._emit(format_instance(inst, args.fmt), args.out)
        return 0

    def solve(self, args: argparse.Namespace) -> int:
        inst = self.resolve_instance(args)
        if args.y is not None:
            if len(args.y) != inst.n_edges:
                raise ConfigError(f"--y needs {inst.n_edges} bits, got {len(args.y)}")
            inst = from_assignment(inst, BitVector.from_string(args.y))
        elif args.random_y:
            rng = np.random.default_rng(self.settings.seed)
            bits = [int(b) for b in rng.integers(0, 2, size=inst.n_edges)]
            inst = from_assignment(inst, BitVector.from_list(bits))

        h = inst.incidence()
        y = inst.rhs()
        result = solve2(h, y)
        gauge = gauge_reduce(inst)
        removal = leaf_removal(inst)
        data: dict[str, Any] = {
            "instance": inst.describe(),
            "y": y.to_string(),
            "satisfiable": result.satisfiable,
            "solution": result.solution.to_list() if result.solution is not None else None,
            "kernel_dim": result.kernel_dim,
            "gauge_case": gauge.case,
            "negative_edges": [a + 1 for a in gauge.negative_edges],
            "leaf_removal": removal.model_dump(),
        }
        if args.brute_force:
            ground = brute_force_classical(inst, self.settings.brute_force_max_spins)
            data["classical"] = {
                **ground.model_dump(),
                "constant_free_energy": ground.constant_free_energy,
            }
        logger.info(
            "[CLI] %s: satisfiable=%s gauge case %s",
            inst.describe(),
            result.satisfiable,
            gauge.case,
        )
        self._emit_json(data, args.out)
        return 0

    def dualize(self, args: argparse.Namespace) -> int:
        inst = self.resolve_instance(args)
        basis = parse_basis(args.basis) if args.basis else None
        dm = dualize(inst, basis_override=basis)
        sectors = parse_sector(args.sector, dm)
        header = {
            "instance": inst.describe(),
            **dump_header(dm),
            "seed": self.settings.seed,
        }
        lines = ["# " + json.dumps(header)]
        if args.s is None:
            lines.append("# symbolic")
            lines += [f"{coeff} {string.label()}" for coeff, string in dm.restrict_symbolic()]
            self._emit("\n".join(lines) + "\n", args.dump)
            return 0
        for sector in sectors:
            lines.append(f"# sector {sector.label()} s={args.s!r}")
            lines.append(format_terms(restrict(dm, sector, args.s)).rstrip("\n"))
        self._emit("\n".join(lines) + "\n", args.dump)
        return 0

    def _operators(
        self, args: argparse.Namespace, inst: Instance
    ) -> list[tuple[AnnealOperator, SectorSpec | None]]:
        if args.full:
            if args.sector != "all-plus":
                logger.warning("[CLI] --full ignores the sector spec %s", args.sector)
            return [(AnnealOperator.full(inst), None)]
        dm = dualize(inst)
        factory = AnnealOperator.embedded if args.embed else AnnealOperator.dual
        return [(factory(dm, sector), sector) for sector in parse_sector(args.sector, dm)]

    def scan(self, args: argparse.Namespace) -> int:
        inst = self.resolve_instance(args)
        grid = self._grid(args.grid)
        operators = self._operators(args, inst)
        many = len(operators) > 1

        summaries = []
        for op, sector in operators:
            curve = gap_scan(op, grid, args.k, self.options, self.settings.workers)
            best = min_gap(curve, op, self.settings.refine_tol, self.options)
            if args.out:
                path = args.out if sector is None else _sector_path(args.out, sector, many)
                write_gap_curve(curve, path)
            summaries.append(
                min_gap_summary(
                    best,
                    operator=op.label,
                    sector=None if sector is None else list(sector.values),
                )
            )
        self._emit_json({"instance": inst.describe(), "min_gaps": summaries}, args.summary)
        return 0

    def scaling(self, args: argparse.Namespace) -> int:
        table = scaling_sweep(
            args.family,
            parse_g_values(args.g),
            self._grid(args.grid),
            args.k,
            self.options,
            self.settings.refine_tol,
            self.settings.max_sites,
            self.settings.workers,
            args.sector,
        )
        if args.out:
            write_scaling(table, args.out)
        self._emit_json(
            {"rows": [row.model_dump() for row in table.rows], "slope": table.log_log_slope()},
            None,
        )
        return 0

    def verify(self, args: argparse.Namespace) -> int:
        report = run_suite(args.suite, self.settings)
        self._emit_json(report.model_dump(), args.out)
        return 0 if report.passed else 1

    def run(self, args: argparse.Namespace) -> int:
        handler = getattr(self, args.command)
        return int(handler(args))
