"""Edge/spin duality of the 3-XORSAT annealing Hamiltonian.

Every basis edge gets a dual spin tau. The edge interaction Z_i Z_j Z_k becomes
tau^x on its site, and a redundant edge becomes the product of tau^x over its
expansion in the basis. sigma^x of spin ``i`` becomes the tau^z-string over the
basis edges containing ``i``, multiplied by a conserved charge when ``i`` is not
a pivot spin. Fixing the charges to +-1 leaves a Hamiltonian on r sites.
"""

import logging
from collections.abc import Sequence
from typing import Any

from ..gf2.linalg import kernel_basis, left_inverse, rank2, row_basis, solve2
from ..gf2.models import BitMatrix, iter_bits
from ..pauli.algebra import expectation_sector
from ..pauli.models import PauliString, TermSum
from ..utils.errors import (
    BadSectorError,
    BadSError,
    ConfigError,
    NotInKernelError,
    NotIndependentError,
    NotXStringError,
)
from ..xorsat.models import Instance
from .models import DualModel, SectorSpec, StructureReport, XTerm, ZTerm

logger = logging.getLogger(__name__)


def dualize(inst: Instance, basis_override: Sequence[int] | None = None) -> DualModel:
    """Build the dual model of ``inst``.

    Args:
        inst: The instance.
        basis_override: Optional 0-based edge indices to use as the row basis.

    Raises:
        ForcedRowsNotABasisError: If ``basis_override`` is not a basis of the edge rows.
    """
    h = inst.incidence()
    basis = row_basis(h, forced_rows=basis_override)
    z = left_inverse(basis.s_a)
    charge_matrix = kernel_basis(h, basis, z)
    pivot_set = set(basis.pivots)
    non_pivots = tuple(j for j in range(inst.n_spins) if j not in pivot_set)

    x_part = [
        XTerm(edge=edge, mask=1 << a, coupling=inst.couplings[edge], kind="single")
        for a, edge in enumerate(basis.independent)
    ]
    x_part += [
        XTerm(edge=edge, mask=combo, coupling=inst.couplings[edge], kind="product")
        for edge, combo in zip(basis.dependent, basis.f.row_bits)
    ]

    charge_of = {j: l for l, j in enumerate(non_pivots)}
    z_part = tuple(
        ZTerm(spin=i, mask=basis.s_a.column(i).bits, charge=charge_of.get(i))
        for i in range(inst.n_spins)
    )

    dm = DualModel(
        n_spins=inst.n_spins,
        n_edges=inst.n_edges,
        basis=basis,
        z_inverse=z,
        charge_matrix=charge_matrix,
        non_pivots=non_pivots,
        x_part=tuple(x_part),
        z_part=z_part,
    )
    logger.info(
        "[Duality] Dualized %s: r=%d q=%d redundant edges=%s",
        inst.describe(),
        dm.r,
        dm.q,
        list(basis.dependent),
    )
    return dm


def _check_s(s: float) -> None:
    if not 0.0 <= s <= 1.0:
        raise BadSError(f"Annealing parameter s={s} outside [0, 1]", s=s)


def restrict(dm: DualModel, sector: SectorSpec, s: float) -> TermSum:
    """The dual Hamiltonian on r sites in one charge sector, constant-free.

    Raises:
        BadSectorError: If the sector does not have one value per charge.
        BadSError: If ``s`` lies outside [0, 1].
    """
    if sector.q != dm.q:
        raise BadSectorError(f"Sector has {sector.q} values, the model has {dm.q} charges")
    _check_s(s)
    r = dm.r
    terms = [(-s * t.coupling, PauliString(n_sites=r, x=t.mask)) for t in dm.x_part]
    for zterm in dm.z_part:
        value = 1 if zterm.charge is None else sector.values[zterm.charge]
        terms.append((-(1.0 - s) * value, PauliString(n_sites=r, z=zterm.mask)))
    return TermSum.build(r, terms)


def structure_report(dm: DualModel) -> StructureReport:
    """Classify the dual terms and collect the ZZ bonds between dual sites."""
    bonds: set[tuple[int, int]] = set()
    single_z = higher_z = constant_z = 0
    for zterm in dm.z_part:
        weight = zterm.mask.bit_count()
        if weight == 0:
            constant_z += 1
        elif weight == 1:
            single_z += 1
        elif weight == 2:
            a, b = iter_bits(zterm.mask)
            bonds.add((a, b))
        else:
            higher_z += 1
    return StructureReport(
        single_x=sum(t.kind == "single" for t in dm.x_part),
        product_x=sum(t.kind == "product" for t in dm.x_part),
        single_z=single_z,
        zz_bonds=tuple(sorted(bonds)),
        higher_z=higher_z,
        constant_z=constant_z,
        charge_dressed=sum(t.charge is not None for t in dm.z_part),
    )


def sector_from_state(dm: DualModel, flipped_spins: Sequence[int]) -> SectorSpec:
    """Sector of the sigma^x product state with sigma^x = -1 on ``flipped_spins`` (1-based)."""
    x_values = [1] * dm.n_spins
    for spin in flipped_spins:
        if not 1 <= spin <= dm.n_spins:
            raise BadSectorError(f"Spin {spin} outside [1, {dm.n_spins}]")
        x_values[spin - 1] = -1
    return SectorSpec(values=tuple(expectation_sector(dm.charges(), x_values)))


def parse_sector(spec: str, dm: DualModel) -> list[SectorSpec]:
    """Resolve a sector specification against the charges of ``dm``.

    ``all-plus``, ``enumerate`` (all 2^q sectors), ``flip:4,6,8`` (the sector of the
    product state with sigma^x = -1 on those 1-based spins) or an explicit ``+1,-1,...``.

    Raises:
        ConfigError: On a malformed spec.
        BadSectorError: If an explicit list does not have q entries.
    """
    if spec == "all-plus":
        return [SectorSpec.all_plus(dm.q)]
    if spec == "enumerate":
        return list(SectorSpec.enumerate(dm.q))
    try:
        if spec.startswith("flip:"):
            spins = [int(v) for v in spec.split(":", 1)[1].split(",") if v.strip()]
            return [sector_from_state(dm, spins)]
        values = tuple(int(v) for v in spec.split(",") if v.strip())
    except ValueError as e:
        raise ConfigError(f"Bad sector spec {spec!r}") from e
    if len(values) != dm.q:
        raise BadSectorError(f"Sector spec has {len(values)} values, the model has {dm.q}")
    try:
        return [SectorSpec(values=values)]
    except ValueError as e:
        raise ConfigError(f"Sector values must be +1 or -1, got {spec!r}") from e


def _alt_matrix(dm: DualModel, alt_charges: Sequence[PauliString]) -> BitMatrix:
    edges = dm.basis.s_a
    for charge in alt_charges:
        if not charge.is_x_string:
            raise NotXStringError(f"Charge {charge.label()} is not a pure X-string")
        if charge.n_sites != dm.n_spins:
            raise NotInKernelError(f"Charge on {charge.n_sites} sites, expected {dm.n_spins}")
        if edges.apply(charge.x_mask).bits:
            raise NotInKernelError(f"Charge {charge.label()} anticommutes with an edge")
    return BitMatrix(n_cols=dm.n_spins, row_bits=tuple(c.x for c in alt_charges))


def sector_transform(
    dm: DualModel, alt_charges: Sequence[PauliString], alt_values: Sequence[int]
) -> SectorSpec:
    """Translate sector values given in another charge basis to the canonical one.

    Each canonical charge is written as a GF(2) combination of ``alt_charges`` and
    gets the product of the corresponding ``alt_values``.

    Raises:
        NotXStringError: If an alternative charge carries a Z factor.
        NotInKernelError: If an alternative charge does not commute with every edge.
        NotIndependentError: If the alternative charges are dependent or too few.
    """
    if len(alt_values) != len(alt_charges):
        raise BadSectorError("One value per alternative charge is required")
    alt = _alt_matrix(dm, alt_charges)
    if alt.n_rows != dm.q or rank2(alt) != dm.q:
        raise NotIndependentError(
            f"{alt.n_rows} charges of rank {rank2(alt)} do not form a basis of {dm.q} charges"
        )

    alt_t = alt.transpose()
    values = []
    for row in dm.charge_matrix.rows():
        solved = solve2(alt_t, row)
        assert solved.solution is not None
        value = 1
        for k in solved.solution.support():
            value *= alt_values[k]
        values.append(value)
    return SectorSpec(values=tuple(values))


def boundary_pair_charges(inst: Instance, dm: DualModel | None = None) -> list[PauliString]:
    """Two-spin charges X_u X_v for degree-1 spins sharing an edge, completed to a basis.

    Missing directions are filled with canonical charges in order.
    """
    if dm is None:
        dm = dualize(inst)
    degree = inst.degrees()
    rows: list[int] = []
    for edge in inst.edges:
        leaves = [v for v in edge if degree[v] == 1]
        for u, v in zip(leaves, leaves[1:]):
            rows.append((1 << (u - 1)) | (1 << (v - 1)))

    chosen: list[int] = []
    for candidate in (*rows, *dm.charge_matrix.row_bits):
        trial = BitMatrix(n_cols=inst.n_spins, row_bits=(*chosen, candidate))
        if rank2(trial) == len(chosen) + 1:
            chosen.append(candidate)
        if len(chosen) == dm.q:
            break
    return [PauliString(n_sites=inst.n_spins, x=bits) for bits in chosen]


def dump_header(dm: DualModel) -> dict[str, Any]:
    """JSON-ready summary of a dual model; spins and edges are 1-based."""
    return {
        "r": dm.r,
        "q": dm.q,
        "pivot_columns": [p + 1 for p in dm.pivots],
        "basis_edges": [e + 1 for e in dm.basis.independent],
        "redundant_edges": [e + 1 for e in dm.redundant_edges],
        "charges": [[a + 1 for a in iter_bits(bits)] for bits in dm.charge_matrix.row_bits],
        "structure": structure_report(dm).model_dump(),
    }
