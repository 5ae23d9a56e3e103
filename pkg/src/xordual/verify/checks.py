"""Oracle checks of the duality, each returning one :class:`CheckResult`."""

import logging
import time
from collections.abc import Sequence

import numpy as np
from scipy.linalg import eigvalsh

from ..duality.embedding import embed_nonlocal
from ..duality.models import DualModel, SectorSpec
from ..duality.oracle import sector_block_oracle
from ..duality.transform import dualize, restrict
from ..gf2.linalg import rank2
from ..gf2.models import BitMatrix
from ..pauli.algebra import commutes
from ..pauli.models import PauliString, TermSum
from ..pauli.operator import ParitySector, PauliOperator
from ..spectrum.anneal import full_terms
from ..spectrum.eigensolver import cluster_levels, lowest_eigs
from ..spectrum.models import SolverOptions
from ..utils.errors import ConfigError, TooLargeError
from ..xorsat.analysis import brute_force_classical, gauge_reduce
from ..xorsat.generators import generate_closure, relabel, with_couplings
from ..xorsat.models import Instance
from .models import CheckResult

logger = logging.getLogger(__name__)

LOWEST_LEVELS = 64

WORKED_EDGES = ((1, 2, 3), (1, 4, 6), (2, 4, 5), (3, 5, 6))
WORKED_BASIS = (1, 2, 3)
WORKED_CHARGES = ("110100", "011010", "101001")
WORKED_TERMS = (
    ("-s", "X1"),
    ("-s", "X2"),
    ("-s", "X3"),
    ("-s", "X1 X2 X3"),
    ("-(1-s)", "Z1"),
    ("-(1-s)", "Z2"),
    ("-(1-s)", "Z3"),
    ("-(1-s)*O1", "Z1 Z2"),
    ("-(1-s)*O2", "Z2 Z3"),
    ("-(1-s)*O3", "Z1 Z3"),
)


def multiset_residual(a: Sequence[float] | np.ndarray, b: Sequence[float] | np.ndarray) -> float:
    """Largest difference after sorting both lists; ``inf`` when the sizes differ."""
    left, right = np.sort(np.asarray(a, dtype=float)), np.sort(np.asarray(b, dtype=float))
    if left.shape != right.shape:
        return float("inf")
    if left.size == 0:
        return 0.0
    return float(np.max(np.abs(left - right)))


def _result(
    name: str,
    instance: str,
    residual: float,
    tolerance: float,
    started: float,
    expect_failure: bool = False,
    detail: str = "",
) -> CheckResult:
    result = CheckResult(
        name=name,
        instance=instance,
        max_residual=residual,
        tolerance=tolerance,
        within_tolerance=bool(residual <= tolerance),
        runtime=time.perf_counter() - started,
        expect_failure=expect_failure,
        detail=detail,
    )
    logger.info(
        "[Verify] %s on %s: residual=%.3e tol=%.1e %s",
        name,
        instance,
        residual,
        tolerance,
        "PASS" if result.passed else "FAIL",
    )
    return result


def _dense_spectrum(termsum: TermSum, parity: tuple[int, int] | None = None) -> np.ndarray:
    op: PauliOperator | ParitySector = PauliOperator(termsum)
    if parity is not None:
        op = ParitySector(op, *parity)
    return eigvalsh(op.to_dense())


def full_spectrum(inst: Instance, dm: DualModel, s: float, dense_limit: int = 4096) -> np.ndarray:
    """All 2^N eigenvalues of the full model: dense, or block by block from the sector oracle."""
    if (1 << inst.n_spins) <= dense_limit:
        return _dense_spectrum(full_terms(inst, s))
    blocks = [
        eigvalsh(sector_block_oracle(inst, dm, sector, s)) for sector in SectorSpec.enumerate(dm.q)
    ]
    return np.concatenate(blocks)


def merged_dual_spectrum(dm: DualModel, s: float) -> np.ndarray:
    """Eigenvalues of the restricted dual in every one of the 2^q sectors, concatenated."""
    return np.concatenate(
        [_dense_spectrum(restrict(dm, sector, s)) for sector in SectorSpec.enumerate(dm.q)]
    )


def check_sector_decomposition(
    inst: Instance,
    s_values: Sequence[float],
    tol: float = 1e-8,
    dense_limit: int = 4096,
    max_spins: int = 15,
    options: SolverOptions | None = None,
) -> CheckResult:
    """The sector spectra of the dual, merged, equal the full spectrum as multisets.

    Above the dense limit the full spectrum is assembled from first-principles sector
    blocks, and the lowest ``LOWEST_LEVELS`` eigenvalues of the full model, solved
    iteratively on all 2^N states, are compared with the merged list as well.

    Raises:
        TooLargeError: If N exceeds ``max_spins``.
    """
    started = time.perf_counter()
    if inst.n_spins > max_spins:
        raise TooLargeError(
            f"Sector decomposition check needs N <= {max_spins}", size=inst.n_spins, limit=max_spins
        )
    options = options or SolverOptions()
    iterative = options.model_copy(
        update={
            "dense_limit": min(options.dense_limit, dense_limit),
            "max_iter": max(options.max_iter, 8 * LOWEST_LEVELS),
        }
    )
    dm = dualize(inst)
    residual = 0.0
    details = []
    for s in s_values:
        full = full_spectrum(inst, dm, s, dense_limit)
        merged = merged_dual_spectrum(dm, s)
        if full.size != 1 << inst.n_spins:
            residual = float("inf")
        residual = max(residual, multiset_residual(full, merged))
        detail = f"s={s}: {merged.size} eigenvalues over {1 << dm.q} sectors"
        if (1 << inst.n_spins) > dense_limit:
            count = min(LOWEST_LEVELS, merged.size)
            lowest = lowest_eigs(full_terms(inst, s), count, iterative)
            residual = max(residual, multiset_residual(lowest, np.sort(merged)[:count]))
            detail += f", lowest {count} checked against the full model"
        details.append(detail)
    return _result(
        "sector_decomposition", inst.describe(), residual, tol, started, detail="; ".join(details)
    )


def _commutator_residual(
    charge: PauliString, h: PauliOperator, trials: int, rng: np.random.Generator
) -> float:
    o = PauliOperator(TermSum.build(charge.n_sites, [(1.0, charge)]))
    worst = 0.0
    for _ in range(trials):
        v = rng.standard_normal(h.dim)
        diff = o.matvec(h.matvec(v)) - h.matvec(o.matvec(v))
        worst = max(worst, float(np.linalg.norm(diff) / np.linalg.norm(v)))
    return worst


def check_charge_commutation(
    inst: Instance,
    dm: DualModel | None = None,
    s_values: Sequence[float] = (0.5,),
    trials: int = 2,
    seed: int = 1234,
    tol: float = 1e-10,
    max_sites: int = 20,
    corrupt: bool = False,
) -> CheckResult:
    """Every charge commutes with every term of H(s), symplectically and numerically.

    With ``corrupt`` the first charge gets an extra X on spin 1 and the entry is a
    negative control. The numeric commutator is skipped above ``max_sites`` spins.
    """
    started = time.perf_counter()
    dm = dm or dualize(inst)
    charges = dm.charges()
    if corrupt and charges:
        charges[0] = PauliString(n_sites=inst.n_spins, x=charges[0].x ^ 1)

    rng = np.random.default_rng(seed)
    residual = 0.0
    violations = 0
    for s in s_values:
        terms = full_terms(inst, s)
        for charge in charges:
            violations += sum(not commutes(charge, p) for _, p in terms.terms)
        if inst.n_spins <= max_sites:
            h = PauliOperator(terms)
            for charge in charges:
                residual = max(residual, _commutator_residual(charge, h, trials, rng))
    if violations:
        residual = max(residual, 1.0)
    numeric = "numeric" if inst.n_spins <= max_sites else "symplectic only"
    return _result(
        "charge_commutation_corrupted" if corrupt else "charge_commutation",
        inst.describe(),
        residual,
        tol,
        started,
        expect_failure=corrupt,
        detail=f"{len(charges)} charges, {violations} anticommuting pairs, {numeric}",
    )


def check_embedding(
    dm: DualModel,
    s_values: Sequence[float],
    sector: SectorSpec | None = None,
    parity_value: int = 1,
    tol: float = 1e-8,
    max_sites: int = 12,
    instance: str = "",
) -> CheckResult:
    """The embedded model at the given parity reproduces the restricted dual spectrum.

    Parity +1 is the physical sector; ``parity_value=-1`` is a negative control.

    Raises:
        TooLargeError: If r exceeds ``max_sites``.
    """
    started = time.perf_counter()
    if dm.r > max_sites:
        raise TooLargeError(f"Embedding check needs r <= {max_sites}", size=dm.r, limit=max_sites)
    sector = sector or SectorSpec.all_plus(dm.q)
    residual = 0.0
    for s in s_values:
        restricted = restrict(dm, sector, s)
        embedded = embed_nonlocal(restricted)
        reference = _dense_spectrum(restricted)
        candidate = _dense_spectrum(embedded.termsum, (embedded.parity.x, parity_value))
        residual = max(residual, multiset_residual(reference, candidate))
    return _result(
        "embedding" if parity_value == 1 else "embedding_wrong_parity",
        instance or f"dual r={dm.r}",
        residual,
        tol,
        started,
        expect_failure=parity_value != 1,
        detail=f"sector {sector.label()}, parity {parity_value:+d}",
    )


def check_worked_example(tol: float = 1e-8) -> CheckResult:
    """Reproduce the six-spin worked example bit for bit.

    With basis edges 2, 3, 4: r = 3, F = (1, 1, 1), Z = [I | 0], the three charges
    X1X2X4, X2X3X5, X1X3X6 and the symbolic dual term list. The greedy basis must give
    the same merged sector spectrum.
    """
    started = time.perf_counter()
    inst = generate_closure(1)
    mismatches: list[str] = []
    if inst.edges != WORKED_EDGES:
        mismatches.append(f"edges {inst.edges}")

    h = inst.incidence()
    if rank2(h) != 3:
        mismatches.append(f"rank {rank2(h)}")
    dm = dualize(inst, basis_override=WORKED_BASIS)
    if dm.basis.f.to_strings() != ["111"]:
        mismatches.append(f"F {dm.basis.f.to_strings()}")
    expected_z = BitMatrix.from_strings(["100000", "010000", "001000"])
    if dm.z_inverse != expected_z:
        mismatches.append(f"Z {dm.z_inverse.to_strings()}")
    if tuple(dm.charge_matrix.to_strings()) != WORKED_CHARGES:
        mismatches.append(f"charges {dm.charge_matrix.to_strings()}")
    labels = tuple(c.label() for c in dm.charges())
    if labels != ("X1 X2 X4", "X2 X3 X5", "X1 X3 X6"):
        mismatches.append(f"charge strings {labels}")
    terms = tuple((coeff, p.label()) for coeff, p in dm.restrict_symbolic())
    if terms != WORKED_TERMS:
        mismatches.append("dual terms " + ", ".join(f"{c} {p}" for c, p in terms))

    greedy = dualize(inst)
    residual = multiset_residual(merged_dual_spectrum(dm, 0.5), merged_dual_spectrum(greedy, 0.5))
    if mismatches:
        residual = max(residual, float(len(mismatches)))
    return _result(
        "worked_example",
        inst.describe(),
        residual,
        tol,
        started,
        detail="; ".join(mismatches) or "all artifacts match",
    )


def _flip_one(inst: Instance, alpha: int) -> Instance:
    couplings = list(inst.couplings)
    couplings[alpha] = -couplings[alpha]
    return with_couplings(inst, couplings)


def check_classical_degeneracy(
    inst: Instance, max_spins: int = 26, dense_sites: int = 12
) -> CheckResult:
    """Classical ground energy and degeneracy against the GF(2) count.

    Satisfiable: energy 0 and 2^(N - r) ground states. A single residual negative
    coupling: energy 2 and 2^(N - r) ground states for every edge whose sign flip
    restores satisfiability. For N <= ``dense_sites`` the lowest level of the full
    model at s = 1 must carry the same multiplicity at energy E0 - M.

    Raises:
        ConfigError: If the instance has more than one irremovable negative coupling.
    """
    started = time.perf_counter()
    gauge = gauge_reduce(inst)
    kernel_dim = inst.n_spins - rank2(inst.incidence())
    if gauge.case == "i":
        expected_energy, expected_count = 0, 1 << kernel_dim
    elif gauge.case == "ii":
        repairs = sum(gauge_reduce(_flip_one(inst, a)).satisfiable for a in range(inst.n_edges))
        expected_energy, expected_count = 2, repairs << kernel_dim
    else:
        raise ConfigError("Degeneracy check covers satisfiable and single-violation instances")

    ground = brute_force_classical(inst, max_spins)
    residual = float(
        abs(ground.energy - expected_energy) + abs(ground.degeneracy - expected_count)
    )
    detail = f"case {gauge.case}: E0={ground.energy} degeneracy={ground.degeneracy}"
    if inst.n_spins <= dense_sites:
        diagonal = PauliOperator(full_terms(inst, 1.0)).diagonal()
        lowest = cluster_levels(diagonal)[0]
        residual = max(
            residual,
            abs(lowest.energy - ground.constant_free_energy),
            float(abs(lowest.multiplicity - expected_count)),
        )
        detail += f", s=1 level {lowest.energy:+.1f} x{lowest.multiplicity}"
    return _result("classical_degeneracy", inst.describe(), residual, 0.0, started, detail=detail)


def check_relabeling(
    inst: Instance, permutation: Sequence[int], s: float = 0.5, tol: float = 1e-8
) -> CheckResult:
    """All-+1 sector spectra and, for small N, full spectra survive a spin relabeling."""
    started = time.perf_counter()
    other = relabel(inst, permutation)
    dm, dm_other = dualize(inst), dualize(other)
    residual = multiset_residual(
        _dense_spectrum(restrict(dm, SectorSpec.all_plus(dm.q), s)),
        _dense_spectrum(restrict(dm_other, SectorSpec.all_plus(dm_other.q), s)),
    )
    if inst.n_spins <= 12:
        residual = max(
            residual,
            multiset_residual(
                _dense_spectrum(full_terms(inst, s)), _dense_spectrum(full_terms(other, s))
            ),
        )
    return _result(
        "relabeling",
        inst.describe(),
        residual,
        tol,
        started,
        detail="permutation " + ",".join(str(p) for p in permutation),
    )
