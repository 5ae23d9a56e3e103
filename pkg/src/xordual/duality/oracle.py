"""Sector blocks of the full model built straight from the instance.

In the sigma^x eigenbasis a state is a bit pattern ``u`` (bit set where sigma^x = -1).
The transverse field is diagonal there and every edge interaction flips the three
bits of its edge. The states with prescribed charge values form one coset of the
edge row space, so a block is enumerated from one particular solution plus all
combinations of the basis edges. Nothing here uses the tau construction.
"""

import logging

import numpy as np

from ..gf2.linalg import solve2
from ..gf2.models import BitVector
from ..utils.errors import BadSectorError, BadSError, TooLargeError
from ..xorsat.models import Instance
from .models import DualModel, SectorSpec

logger = logging.getLogger(__name__)

_MAX_BLOCK_BITS = 14


def sector_block_oracle(
    inst: Instance, dm: DualModel, sector: SectorSpec, s: float
) -> np.ndarray:
    """Dense block of -(1-s) sum_i X_i - s sum_a J_a Z_i Z_j Z_k on one charge sector.

    The charges are those of ``dm``; the block has dimension 2^r.

    Raises:
        BadSectorError: If the sector does not match the charge count.
        BadSError: If ``s`` lies outside [0, 1].
        TooLargeError: If the block dimension exceeds 2^14.
    """
    if sector.q != dm.q:
        raise BadSectorError(f"Sector has {sector.q} values, the model has {dm.q} charges")
    if not 0.0 <= s <= 1.0:
        raise BadSError(f"Annealing parameter s={s} outside [0, 1]", s=s)
    if dm.r > _MAX_BLOCK_BITS or inst.n_spins > 62:
        raise TooLargeError(
            f"Sector block of dimension 2^{dm.r} is too large for the dense oracle",
            size=dm.r,
            limit=_MAX_BLOCK_BITS,
        )

    basis = dm.basis
    targets = BitVector.from_list([(1 - v) // 2 for v in sector.values])
    particular = solve2(dm.charge_matrix, targets)
    assert particular.solution is not None

    r = basis.rank
    dim = 1 << r
    states = np.zeros(dim, dtype=np.int64)
    states[0] = particular.solution.bits
    for k, row in enumerate(basis.s_a.row_bits):
        half = 1 << k
        states[half : 2 * half] = states[:half] ^ row

    n_minus = np.bitwise_count(states).astype(np.float64)
    block = np.diag(-(1.0 - s) * (inst.n_spins - 2.0 * n_minus))

    index = np.arange(dim, dtype=np.int64)
    flips = [1 << a for a in range(r)] + list(basis.f.row_bits)
    edges = [*basis.independent, *basis.dependent]
    for edge, flip in zip(edges, flips):
        block[index ^ flip, index] += -s * inst.couplings[edge]

    logger.debug("[Duality] Oracle block %s of dim %d at s=%.4f", sector.label(), dim, s)
    return block
