"""Classical analysis of 3-XORSAT instances: leaf removal, gauge normalization, brute force."""

import logging
from collections.abc import Sequence

import numpy as np

from ..gf2.linalg import row_basis, solve2
from ..gf2.models import BitMatrix, BitVector
from ..utils.errors import InvalidInstanceError, TooLargeError
from .generators import make_instance
from .models import (
    ClassicalGroundState,
    GaugeResult,
    Instance,
    LeafRemovalReport,
    LeafRemovalStep,
)

logger = logging.getLogger(__name__)

_CHUNK_BITS = 20


def incidence_matrix(inst: Instance) -> BitMatrix:
    """H with one row per edge; column ``i - 1`` is spin ``i``."""
    return inst.incidence()


def coupling_signs(inst: Instance) -> BitVector:
    """The right-hand side y of H x = y, with J = (-1)^y."""
    return inst.rhs()


def from_assignment(inst: Instance, y: BitVector) -> Instance:
    """Same hypergraph with couplings J = (-1)^y."""
    if y.length != inst.n_edges:
        raise InvalidInstanceError(f"Expected {inst.n_edges} right-hand side bits, got {y.length}")
    couplings = [1 - 2 * b for b in y.to_list()]
    return make_instance(inst.n_spins, inst.edges, couplings, family=inst.family, g=inst.g)


def classical_energy(inst: Instance, spins: Sequence[int]) -> int:
    """Energy sum_a (1 - J_a s_i s_j s_k) of a +-1 spin assignment (spin 1 first)."""
    if len(spins) != inst.n_spins or any(s not in (1, -1) for s in spins):
        raise InvalidInstanceError(f"Assignment must hold {inst.n_spins} values of +1/-1")
    energy = 0
    for (i, j, k), coupling in zip(inst.edges, inst.couplings):
        energy += 1 - coupling * spins[i - 1] * spins[j - 1] * spins[k - 1]
    return energy


def leaf_removal(inst: Instance, edge_order: Sequence[int] | None = None) -> LeafRemovalReport:
    """Iteratively remove edges holding spins that enter no other edge.

    Each step takes the first surviving edge in ``edge_order`` (ascending index by
    default) that contains a spin of degree 1, and removes it together with all of
    its degree-1 spins.
    """
    order = list(range(inst.n_edges)) if edge_order is None else list(edge_order)
    if sorted(order) != list(range(inst.n_edges)):
        raise InvalidInstanceError("Edge order must be a permutation of the edge indices")

    degree = inst.degrees()
    alive = set(order)
    steps: list[LeafRemovalStep] = []

    while True:
        for alpha in order:
            if alpha not in alive:
                continue
            leaves = tuple(v for v in inst.edges[alpha] if degree[v] == 1)
            if leaves:
                break
        else:
            break
        alive.discard(alpha)
        for v in inst.edges[alpha]:
            degree[v] -= 1
        steps.append(LeafRemovalStep(edge=alpha, spins=leaves))

    report = LeafRemovalReport(
        steps=tuple(steps),
        pair_events=sum(len(step.spins) >= 2 for step in steps),
        residual_core=tuple(sorted(alive)),
        fully_decimated=not alive,
    )
    logger.debug(
        "[Model] Leaf removal: %d steps, %d pair events, core of %d edges",
        len(steps),
        report.pair_events,
        len(report.residual_core),
    )
    return report


def gauge_reduce(inst: Instance) -> GaugeResult:
    """Find spin flips sigma^z -> -sigma^z that turn as many couplings as possible to +1.

    Flips solve H f = y over GF(2). When the system is inconsistent the flips solve
    the equations of the independent edges only, so every residual -1 sits on an
    edge that ``row_basis`` marks as dependent (a single one for the closure family).
    """
    h = inst.incidence()
    y = inst.rhs()
    result = solve2(h, y)
    if result.satisfiable:
        assert result.solution is not None
        flips = result.solution
    else:
        basis = row_basis(h)
        sub_y = BitVector.from_list([y[i] for i in basis.independent])
        sub = solve2(basis.s_a, sub_y)
        assert sub.solution is not None
        flips = sub.solution

    parities = h.apply(flips)
    couplings = tuple(
        j * (-1 if parities[a] else 1) for a, j in enumerate(inst.couplings)
    )
    gauge = GaugeResult(satisfiable=result.satisfiable, flips=flips, couplings=couplings)
    logger.debug("[Model] Gauge case %s, negative edges %s", gauge.case, gauge.negative_edges)
    return gauge


def brute_force_classical(inst: Instance, max_spins: int = 26) -> ClassicalGroundState:
    """Enumerate all 2^N assignments and return the minimum energy and its multiplicity.

    Energies follow the convention with the constant, E = sum_a (1 - J_a s_i s_j s_k).

    Raises:
        TooLargeError: If N exceeds ``max_spins``.
    """
    n = inst.n_spins
    if n > max_spins:
        raise TooLargeError(
            f"Brute force over 2^{n} assignments exceeds the bound 2^{max_spins}",
            size=n,
            limit=max_spins,
        )

    total = 1 << n
    chunk = min(total, 1 << _CHUNK_BITS)
    best = None
    count = 0
    for start in range(0, total, chunk):
        x = np.arange(start, min(start + chunk, total), dtype=np.int64)
        energy = np.zeros(x.shape, dtype=np.int64)
        for (i, j, k), coupling in zip(inst.edges, inst.couplings):
            parity = ((x >> (i - 1)) ^ (x >> (j - 1)) ^ (x >> (k - 1))) & 1
            energy += 1 - coupling + 2 * coupling * parity
        low = int(energy.min())
        hits = int(np.count_nonzero(energy == low))
        if best is None or low < best:
            best, count = low, hits
        elif low == best:
            count += hits

    assert best is not None
    logger.debug("[Model] Brute force %s: E0=%d degeneracy=%d", inst.describe(), best, count)
    return ClassicalGroundState(energy=best, degeneracy=count, n_edges=inst.n_edges)
