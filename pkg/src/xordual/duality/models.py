"""Data types of the edge/spin duality."""

from collections.abc import Iterator
from itertools import product
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..gf2.models import BitMatrix, RowBasis, iter_bits
from ..pauli.models import PauliString, TermSum


class XTerm(BaseModel):
    """A dual X-string standing for one edge interaction Z_i Z_j Z_k."""

    model_config = ConfigDict(frozen=True)

    edge: int
    mask: int
    coupling: int
    kind: Literal["single", "product"]


class ZTerm(BaseModel):
    """The dual Z-string standing for sigma^x of one original spin.

    For a spin outside the pivot set the string is multiplied by the charge ``charge``.
    """

    model_config = ConfigDict(frozen=True)

    spin: int
    mask: int
    charge: Optional[int] = None


class DualModel(BaseModel):
    """Output of :func:`xordual.duality.dualize`.

    Dual site ``a`` belongs to basis edge ``basis.independent[a]``. Spins and sites
    are 0-based here.
    """

    model_config = ConfigDict(frozen=True)

    n_spins: int
    n_edges: int
    basis: RowBasis
    z_inverse: BitMatrix
    charge_matrix: BitMatrix
    non_pivots: tuple[int, ...]
    x_part: tuple[XTerm, ...]
    z_part: tuple[ZTerm, ...]

    @property
    def r(self) -> int:
        return self.basis.rank

    @property
    def q(self) -> int:
        return self.charge_matrix.n_rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return self.basis.pivots

    @property
    def redundant_edges(self) -> tuple[int, ...]:
        return self.basis.dependent

    def charges(self) -> list[PauliString]:
        """Charges O_l as X-strings on the original spins."""
        return [
            PauliString(n_sites=self.n_spins, x=bits) for bits in self.charge_matrix.row_bits
        ]

    def product_terms(self) -> list[XTerm]:
        return [t for t in self.x_part if t.kind == "product"]

    def restrict_symbolic(self) -> list[tuple[str, PauliString]]:
        """Dual terms with charge-dependent coefficients kept as symbols.

        Charges are written ``O1..Oq``; ``s`` is the annealing parameter.
        """
        out: list[tuple[str, PauliString]] = []
        for term in self.x_part:
            sign = "-" if term.coupling > 0 else "+"
            out.append((f"{sign}s", PauliString(n_sites=self.r, x=term.mask)))
        for zterm in self.z_part:
            dressing = "" if zterm.charge is None else f"*O{zterm.charge + 1}"
            out.append((f"-(1-s){dressing}", PauliString(n_sites=self.r, z=zterm.mask)))
        return out


class SectorSpec(BaseModel):
    """Eigenvalues +-1 of the charges, in the order of the charge matrix rows."""

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...]

    @field_validator("values")
    @classmethod
    def _plus_minus_one(cls, values: tuple[int, ...]) -> tuple[int, ...]:
        if any(v not in (1, -1) for v in values):
            raise ValueError("Sector values must be +1 or -1")
        return values

    @classmethod
    def all_plus(cls, q: int) -> "SectorSpec":
        return cls(values=(1,) * q)

    @classmethod
    def from_index(cls, q: int, index: int) -> "SectorSpec":
        """Sector number ``index``: bit ``l`` set means charge ``l`` is -1."""
        return cls(values=tuple(-1 if (index >> l) & 1 else 1 for l in range(q)))

    @classmethod
    def enumerate(cls, q: int) -> Iterator["SectorSpec"]:
        for signs in product((1, -1), repeat=q):
            yield cls(values=tuple(reversed(signs)))

    @property
    def q(self) -> int:
        return len(self.values)

    @property
    def index(self) -> int:
        return sum(1 << l for l, v in enumerate(self.values) if v < 0)

    def label(self) -> str:
        return "".join("+" if v > 0 else "-" for v in self.values) or "()"


class StructureReport(BaseModel):
    """Shape of a dual model: term counts by type and the ZZ bonds of the dual lattice."""

    model_config = ConfigDict(frozen=True)

    single_x: int
    product_x: int
    single_z: int
    zz_bonds: tuple[tuple[int, int], ...]
    higher_z: int
    constant_z: int
    charge_dressed: int

    @property
    def zz_count(self) -> int:
        return len(self.zz_bonds)

    def adjacency(self) -> dict[int, list[int]]:
        graph: dict[int, list[int]] = {}
        for a, b in self.zz_bonds:
            graph.setdefault(a, []).append(b)
            graph.setdefault(b, []).append(a)
        return {k: sorted(v) for k, v in sorted(graph.items())}


class EmbeddedModel(BaseModel):
    """A dual model on r + 1 sites whose non-local term became a single X.

    Physical states are those with ``parity`` equal to ``physical_parity``.
    """

    model_config = ConfigDict(frozen=True)

    termsum: TermSum
    parity: PauliString
    physical_parity: int = Field(default=1)

    @property
    def n_sites(self) -> int:
        return self.termsum.n_sites

    def parity_sites(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.parity.x))
