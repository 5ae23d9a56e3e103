"""Instance construction: validation, the tree and closure families, coupling specs."""

import logging
from collections.abc import Sequence

import numpy as np

from ..gf2.linalg import row_basis
from ..utils.errors import (
    BadArityError,
    ConfigError,
    DuplicateEdgeError,
    InvalidGError,
    InvalidInstanceError,
    OutOfRangeError,
)
from .models import Edge, Family, Instance

logger = logging.getLogger(__name__)


def make_instance(
    n_spins: int,
    edges: Sequence[Sequence[int]],
    couplings: Sequence[int] | None = None,
    family: Family | None = None,
    g: int | None = None,
) -> Instance:
    """Validate and build an instance; each triple is stored sorted ascending.

    Args:
        n_spins: Number of spins N.
        edges: Vertex triples with labels in [1, N].
        couplings: J per edge, +1 or -1; all +1 when omitted.
        family: Optional generator family tag.
        g: Optional generation count of the family.

    Raises:
        BadArityError: If a triple does not hold three distinct spins.
        OutOfRangeError: If a label lies outside [1, N].
        DuplicateEdgeError: If a triple repeats.
        InvalidInstanceError: If there are no edges or the couplings are malformed.
    """
    if n_spins < 1:
        raise InvalidInstanceError(f"Instance needs at least one spin, got {n_spins}")
    if not edges:
        raise InvalidInstanceError("Instance needs at least one edge")
    if couplings is None:
        couplings = [1] * len(edges)
    if len(couplings) != len(edges):
        raise InvalidInstanceError(
            f"Got {len(couplings)} couplings for {len(edges)} edges"
        )
    if any(j not in (1, -1) for j in couplings):
        raise InvalidInstanceError("Couplings must be +1 or -1")

    seen: set[Edge] = set()
    stored: list[Edge] = []
    for edge in edges:
        triple = tuple(int(v) for v in edge)
        if len(triple) != 3 or len(set(triple)) != 3:
            raise BadArityError(f"Edge {triple} is not three distinct spins", edge=triple)
        for v in triple:
            if not 1 <= v <= n_spins:
                raise OutOfRangeError(f"Spin {v} outside [1, {n_spins}]", spin=v)
        key: Edge = tuple(sorted(triple))  # type: ignore[assignment]
        if key in seen:
            raise DuplicateEdgeError(f"Edge {key} appears twice", edge=key)
        seen.add(key)
        stored.append(key)

    return Instance(
        n_spins=n_spins,
        edges=tuple(stored),
        couplings=tuple(int(j) for j in couplings),
        family=family,
        g=g,
    )


def _tree_edges(g: int) -> tuple[int, list[Edge], list[int]]:
    """Edges of the g-generation tree and its boundary (last-generation) spins."""
    edges: list[Edge] = [(1, 2, 3)]
    degree = {1: 1, 2: 1, 3: 1}
    frontier = [1, 2, 3]
    next_label = 4
    for _ in range(2, g + 1):
        new_frontier: list[int] = []
        for v in frontier:
            if degree[v] != 1:
                continue
            a, b = next_label, next_label + 1
            next_label += 2
            edges.append((v, a, b))
            degree[v] += 1
            degree[a] = degree[b] = 1
            new_frontier += [a, b]
        frontier = new_frontier
    return next_label - 1, edges, frontier


def generate_tree(g: int) -> Instance:
    """Tree hypergraph with g generations: N = 3(2^g - 1), M = 3 * 2^(g-1) - 2.

    Generation 1 is the edge {1, 2, 3}; afterwards every spin of the previous
    generation that lies in a single edge spawns one edge with two fresh spins.
    Labels are assigned breadth first.

    Raises:
        InvalidGError: If g < 1.
    """
    if g < 1:
        raise InvalidGError(f"Generation count must be at least 1, got {g}", g=g)
    n, edges, _ = _tree_edges(g)
    logger.debug("[Model] Generated tree g=%d: N=%d M=%d", g, n, len(edges))
    return make_instance(n, edges, family="tree", g=g)


def generate_closure(g: int) -> Instance:
    """Closure of the g-generation tree: every spin has degree exactly 2.

    The degree-1 boundary spins are placed on a cycle in ascending label order,
    a fresh spin is inserted between consecutive boundary spins, and each
    boundary spin gets the edge {b, fresh-left, fresh-right}. For g = 1 this is
    the six-spin instance with edges (1,2,3), (1,4,6), (2,4,5), (3,5,6).

    Raises:
        InvalidGError: If g < 1.
    """
    if g < 1:
        raise InvalidGError(f"Generation count must be at least 1, got {g}", g=g)
    n, edges, boundary = _tree_edges(g)
    boundary = sorted(boundary)
    k = len(boundary)
    fresh = [n + 1 + t for t in range(k)]  # fresh[t] sits between boundary[t] and boundary[t+1]
    for t, b in enumerate(boundary):
        edges.append((b, fresh[t - 1], fresh[t]))
    n_total = n + k
    logger.debug("[Model] Generated closure g=%d: N=%d M=%d", g, n_total, len(edges))
    return make_instance(n_total, edges, family="closure", g=g)


def generate(family: Family, g: int) -> Instance:
    """Dispatch to the tree or closure generator."""
    if family == "tree":
        return generate_tree(g)
    if family == "closure":
        return generate_closure(g)
    raise ConfigError(f"Unknown family {family!r}")


def with_couplings(inst: Instance, couplings: Sequence[int]) -> Instance:
    """Same hypergraph with new couplings."""
    return make_instance(inst.n_spins, inst.edges, couplings, family=inst.family, g=inst.g)


def make_couplings(inst: Instance, spec: str, seed: int = 0) -> tuple[int, ...]:
    """Resolve a coupling specification for ``inst``.

    Supported specs: ``all-plus``; ``random`` (seeded signs); ``unsat`` (a single
    -1 on the first redundant edge of the greedy row basis, which makes the
    product of couplings over that dependency negative); ``explicit:+1,-1,...``.

    Raises:
        ConfigError: On an unknown or malformed spec.
        InvalidInstanceError: If ``unsat`` is asked of an instance without redundant edges.
    """
    m = inst.n_edges
    if spec == "all-plus":
        return (1,) * m
    if spec == "random":
        rng = np.random.default_rng(seed)
        return tuple(int(v) for v in rng.choice([1, -1], size=m))
    if spec == "unsat":
        basis = row_basis(inst.incidence())
        if not basis.dependent:
            raise InvalidInstanceError(
                "Every edge is independent; no coupling choice is unsatisfiable"
            )
        couplings = [1] * m
        couplings[basis.dependent[0]] = -1
        return tuple(couplings)
    if spec.startswith("explicit:"):
        try:
            values = tuple(int(v) for v in spec.split(":", 1)[1].split(","))
        except ValueError as e:
            raise ConfigError(f"Bad explicit couplings {spec!r}") from e
        if len(values) != m:
            raise ConfigError(f"Explicit couplings need {m} values, got {len(values)}")
        return values
    raise ConfigError(f"Unknown coupling spec {spec!r}")


def relabel(inst: Instance, permutation: Sequence[int]) -> Instance:
    """Rename spin ``i`` to ``permutation[i - 1]``; edge order and couplings are kept.

    Raises:
        ConfigError: If ``permutation`` is not a permutation of 1..N.
    """
    if sorted(permutation) != list(range(1, inst.n_spins + 1)):
        raise ConfigError("Relabeling must be a permutation of 1..N")
    edges = [tuple(permutation[v - 1] for v in edge) for edge in inst.edges]
    return make_instance(inst.n_spins, edges, inst.couplings, family=inst.family, g=inst.g)
