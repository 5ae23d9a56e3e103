"""Fixed verification suites run through the worker pool."""

import logging
from collections.abc import Callable
from functools import partial
from typing import Literal

from ..config.settings import Settings
from ..duality.transform import dualize
from ..spectrum.models import SolverOptions
from ..spectrum.scan import run_pool
from ..utils.errors import ConfigError
from ..xorsat.generators import generate, make_couplings, with_couplings
from ..xorsat.models import Family, Instance
from .checks import (
    check_charge_commutation,
    check_classical_degeneracy,
    check_embedding,
    check_relabeling,
    check_sector_decomposition,
    check_worked_example,
)
from .models import CheckResult, VerificationReport

logger = logging.getLogger(__name__)

SuiteName = Literal["quick", "acceptance", "paper"]

DECOMPOSITION_S = (0.25, 0.5, 0.75)
EMBEDDING_S = (0.3, 0.65)

Task = Callable[[], CheckResult]


def _call(task: Task) -> CheckResult:
    return task()


def _unsat(inst: Instance) -> Instance:
    return with_couplings(inst, make_couplings(inst, "unsat"))


def _reversed_labels(inst: Instance) -> list[int]:
    return list(range(inst.n_spins, 0, -1))


def build_tasks(suite: SuiteName, settings: Settings) -> list[Task]:
    """The checks of ``suite`` as picklable zero-argument callables.

    ``quick`` covers the one-generation instances and the six-spin fixture;
    ``acceptance`` adds the larger trees and closures; ``paper`` is another name for it.

    Raises:
        ConfigError: On an unknown suite name.
    """
    if suite == "quick":
        decomposition: list[tuple[Family, int]] = [("tree", 1), ("closure", 1)]
        commutation: list[tuple[Family, int]] = [("tree", 1), ("closure", 1)]
        embedding = [1]
        degeneracy: list[tuple[Family, int]] = [("tree", 1), ("closure", 1)]
        relabeled: list[tuple[Family, int]] = [("closure", 1)]
        corrupted: tuple[Family, int] = ("closure", 1)
    elif suite in ("acceptance", "paper"):
        decomposition = [("tree", 1), ("tree", 2), ("closure", 1), ("closure", 2)]
        commutation = [("tree", g) for g in range(1, 5)] + [("closure", g) for g in range(1, 4)]
        embedding = [1, 2]
        degeneracy = [("tree", 1), ("tree", 2), ("closure", 1)]
        relabeled = [("closure", 1), ("tree", 2)]
        corrupted = ("tree", 2)
    else:
        raise ConfigError(f"Unknown suite {suite!r}; use quick, acceptance or paper")

    options = SolverOptions.from_settings(settings)
    spectrum_tol = settings.spectrum_tol
    tasks: list[Task] = [partial(check_worked_example, spectrum_tol)]

    for family, g in decomposition:
        tasks.append(
            partial(
                check_sector_decomposition,
                generate(family, g),
                DECOMPOSITION_S,
                tol=spectrum_tol,
                dense_limit=settings.dense_limit,
                options=options,
            )
        )

    commutation_args = {
        "s_values": DECOMPOSITION_S,
        "seed": settings.seed,
        "tol": settings.commutator_tol,
        "max_sites": settings.numeric_commutator_max_sites,
    }
    for family, g in commutation:
        tasks.append(partial(check_charge_commutation, generate(family, g), **commutation_args))
    tasks.append(
        partial(check_charge_commutation, generate(*corrupted), corrupt=True, **commutation_args)
    )

    for g in embedding:
        inst = generate("closure", g)
        dm = dualize(inst)
        for parity in (1, -1):
            tasks.append(
                partial(
                    check_embedding,
                    dm,
                    EMBEDDING_S,
                    parity_value=parity,
                    tol=spectrum_tol,
                    instance=inst.describe(),
                )
            )

    max_spins = settings.brute_force_max_spins
    for family, g in degeneracy:
        tasks.append(partial(check_classical_degeneracy, generate(family, g), max_spins))
    tasks.append(partial(check_classical_degeneracy, _unsat(generate("closure", 1)), max_spins))

    for family, g in relabeled:
        inst = generate(family, g)
        tasks.append(partial(check_relabeling, inst, _reversed_labels(inst), tol=spectrum_tol))
    return tasks


def run_suite(
    suite: SuiteName = "quick", settings: Settings | None = None, workers: int | None = None
) -> VerificationReport:
    """Run every check of ``suite`` and collect the report; checks are independent."""
    settings = settings or Settings()
    tasks = build_tasks(suite, settings)
    workers = settings.workers if workers is None else workers
    logger.info("[Verify] Running suite %s: %d checks on %d workers", suite, len(tasks), workers)
    checks = run_pool(_call, tasks, workers)
    report = VerificationReport(suite=suite, seed=settings.seed, checks=tuple(checks))
    failures = report.failures()
    if failures:
        logger.warning(
            "[Verify] Suite %s failed %d of %d checks: %s",
            suite,
            len(failures),
            len(checks),
            ", ".join(f"{c.name} ({c.instance})" for c in failures),
        )
    else:
        logger.info("[Verify] Suite %s passed all %d checks", suite, len(checks))
    return report
