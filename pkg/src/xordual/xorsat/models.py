"""3-XORSAT instance models.

Spins are labelled 1..N as in the instance formats; in bit masks spin ``i``
occupies bit ``i - 1``.
"""

from collections import Counter
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..gf2.models import BitMatrix, BitVector

Edge = tuple[int, int, int]
Family = Literal["tree", "closure"]


class Instance(BaseModel):
    """A 3-XORSAT problem: N spins, M hyperedges, couplings J in {+1, -1}.

    Build instances through :func:`xordual.xorsat.make_instance`, which validates
    the invariants; the model itself only stores them.
    """

    model_config = ConfigDict(frozen=True)

    n_spins: int = Field(ge=1)
    edges: tuple[Edge, ...]
    couplings: tuple[int, ...]
    family: Optional[Family] = None
    g: Optional[int] = None

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, spin: int) -> int:
        return sum(spin in edge for edge in self.edges)

    def degrees(self) -> dict[int, int]:
        """Degree of every spin, including spins that appear in no edge."""
        counts = Counter(v for edge in self.edges for v in edge)
        return {i: counts.get(i, 0) for i in range(1, self.n_spins + 1)}

    def edge_mask(self, alpha: int) -> int:
        mask = 0
        for v in self.edges[alpha]:
            mask |= 1 << (v - 1)
        return mask

    def incidence(self) -> BitMatrix:
        """The M x N matrix H of the linear system H x = y (mod 2)."""
        return BitMatrix(
            n_cols=self.n_spins,
            row_bits=tuple(self.edge_mask(a) for a in range(self.n_edges)),
        )

    def rhs(self) -> BitVector:
        """Right-hand side y with J = (-1)^y."""
        return BitVector.from_list([(1 - j) // 2 for j in self.couplings])

    def describe(self) -> str:
        if self.family is not None:
            return f"{self.family}(g={self.g}) N={self.n_spins} M={self.n_edges}"
        return f"instance N={self.n_spins} M={self.n_edges}"


class LeafRemovalStep(BaseModel):
    """One decimation step: an edge and the degree-1 spins removed with it."""

    model_config = ConfigDict(frozen=True)

    edge: int
    spins: tuple[int, ...]


class LeafRemovalReport(BaseModel):
    """Outcome of iterated leaf removal."""

    model_config = ConfigDict(frozen=True)

    steps: tuple[LeafRemovalStep, ...]
    pair_events: int
    residual_core: tuple[int, ...]
    fully_decimated: bool


class GaugeResult(BaseModel):
    """Spin relabeling sigma^z -> -sigma^z that normalizes the couplings."""

    model_config = ConfigDict(frozen=True)

    satisfiable: bool
    flips: BitVector
    couplings: tuple[int, ...]

    @property
    def negative_edges(self) -> tuple[int, ...]:
        return tuple(a for a, j in enumerate(self.couplings) if j < 0)

    @property
    def case(self) -> Literal["i", "ii", "unsat"]:
        """Coupling class: all +1, a single irremovable -1, or several."""
        if self.satisfiable:
            return "i"
        return "ii" if len(self.negative_edges) == 1 else "unsat"


class ClassicalGroundState(BaseModel):
    """Minimum of the classical energy sum_a (1 - J_a s_i s_j s_k) and its multiplicity."""

    model_config = ConfigDict(frozen=True)

    energy: int
    degeneracy: int
    n_edges: int

    @property
    def constant_free_energy(self) -> int:
        """The same minimum with the constant M dropped, i.e. of -sum_a J_a s_i s_j s_k."""
        return self.energy - self.n_edges
