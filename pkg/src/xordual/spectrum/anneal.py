"""Annealing Hamiltonians H(s) = (1 - s) H_driver + s H_problem, constant-free."""

import logging
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from ..duality.embedding import embed_nonlocal
from ..duality.models import DualModel, SectorSpec
from ..duality.transform import restrict
from ..pauli.models import PauliString, TermSum
from ..utils.errors import BadSError
from ..xorsat.models import Instance

logger = logging.getLogger(__name__)

OperatorKind = Literal["full", "dual", "embedded"]


def check_s(s: float) -> None:
    if not 0.0 <= s <= 1.0:
        raise BadSError(f"Annealing parameter s={s} outside [0, 1]", s=s)


def full_terms(inst: Instance, s: float) -> TermSum:
    """-(1 - s) sum_i X_i - s sum_a J_a Z_i Z_j Z_k on the original spins.

    The classical energy with constant is this operator at s = 1 plus M.
    """
    check_s(s)
    return AnnealOperator.full(inst).terms(s)


class AnnealOperator(BaseModel):
    """A picklable factory of H(s) with an optional X-string parity constraint."""

    model_config = ConfigDict(frozen=True)

    kind: OperatorKind
    label: str
    driver: TermSum
    problem: TermSum
    parity_mask: Optional[int] = None
    parity_value: int = 1

    @classmethod
    def full(cls, inst: Instance) -> "AnnealOperator":
        n = inst.n_spins
        driver = TermSum.build(n, ((-1.0, PauliString(n_sites=n, x=1 << i)) for i in range(n)))
        problem = TermSum.build(
            n,
            (
                (-float(j), PauliString(n_sites=n, z=inst.edge_mask(a)))
                for a, j in enumerate(inst.couplings)
            ),
        )
        return cls(kind="full", label=f"full {inst.describe()}", driver=driver, problem=problem)

    @classmethod
    def dual(cls, dm: DualModel, sector: SectorSpec) -> "AnnealOperator":
        return cls(
            kind="dual",
            label=f"dual r={dm.r} sector {sector.label()}",
            driver=restrict(dm, sector, 0.0),
            problem=restrict(dm, sector, 1.0),
        )

    @classmethod
    def embedded(cls, dm: DualModel, sector: SectorSpec) -> "AnnealOperator":
        """Dual with its product term embedded; every solve is restricted to parity +1.

        The embedding is linear in the coefficients, so it is done once at s = 1/2
        and split back into driver and problem parts.
        """
        model = embed_nonlocal(restrict(dm, sector, 0.5))
        n = model.n_sites
        driver = [(2.0 * c, p) for c, p in model.termsum.terms if p.is_z_string]
        problem = [(2.0 * c, p) for c, p in model.termsum.terms if not p.is_z_string]
        return cls(
            kind="embedded",
            label=f"embedded r+1={n} sector {sector.label()}",
            driver=TermSum.build(n, driver),
            problem=TermSum.build(n, problem),
            parity_mask=model.parity.x,
            parity_value=model.physical_parity,
        )

    @property
    def n_sites(self) -> int:
        return self.driver.n_sites

    @property
    def parity(self) -> tuple[int, int] | None:
        if self.parity_mask is None:
            return None
        return self.parity_mask, self.parity_value

    @property
    def dim(self) -> int:
        """Dimension of the space the spectrum lives in (after the parity constraint)."""
        full = 1 << self.n_sites
        return full if self.parity_mask is None else full // 2

    def terms(self, s: float) -> TermSum:
        check_s(s)
        return TermSum.build(
            self.n_sites,
            [
                *(((1.0 - s) * c, p) for c, p in self.driver.terms),
                *((s * c, p) for c, p in self.problem.terms),
            ],
        )


def assemble(source: Instance | AnnealOperator, s: float) -> TermSum:
    """H(s) of an instance (full model) or of a prepared dual/embedded operator.

    Raises:
        BadSError: If ``s`` lies outside [0, 1].
    """
    if isinstance(source, Instance):
        return full_terms(source, s)
    return source.terms(s)
