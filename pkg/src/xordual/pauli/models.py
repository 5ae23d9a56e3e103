"""Pauli strings in symplectic form and real-weighted sums of them.

A string on ``n_sites`` qubits is stored as two integer masks: bit ``a`` of ``x``
marks an X factor on site ``a`` and bit ``a`` of ``z`` a Z factor. Y factors never
occur, so the masks are disjoint and every string is Hermitian.
"""

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..gf2.models import BitVector, iter_bits
from ..utils.errors import SizeMismatchError, YProductError


class PauliString(BaseModel):
    """A tensor product of X, Z and identity factors."""

    model_config = ConfigDict(frozen=True)

    n_sites: int = Field(ge=0)
    x: int = Field(default=0, ge=0)
    z: int = Field(default=0, ge=0)

    @model_validator(mode="before")
    @classmethod
    def _reject_y(cls, data: object) -> object:
        if isinstance(data, dict) and data.get("x", 0) & data.get("z", 0):
            raise YProductError("X and Z factors on the same site would form a Y")
        return data

    @model_validator(mode="after")
    def _check_width(self) -> "PauliString":
        if (self.x | self.z) >> self.n_sites:
            raise ValueError("Pauli masks exceed n_sites")
        return self

    @classmethod
    def from_sites(
        cls, n_sites: int, x_sites: Iterable[int] = (), z_sites: Iterable[int] = ()
    ) -> "PauliString":
        """Build a string from 0-based site indices."""
        x = 0
        for a in x_sites:
            x |= 1 << a
        z = 0
        for a in z_sites:
            z |= 1 << a
        return cls(n_sites=n_sites, x=x, z=z)

    @classmethod
    def identity(cls, n_sites: int) -> "PauliString":
        return cls(n_sites=n_sites)

    @property
    def x_mask(self) -> BitVector:
        return BitVector(length=self.n_sites, bits=self.x)

    @property
    def z_mask(self) -> BitVector:
        return BitVector(length=self.n_sites, bits=self.z)

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def is_identity(self) -> bool:
        return not (self.x or self.z)

    @property
    def is_x_string(self) -> bool:
        return self.z == 0

    @property
    def is_z_string(self) -> bool:
        return self.x == 0

    def x_sites(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.x))

    def z_sites(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.z))

    def label(self) -> str:
        """Compact label such as ``X1 X2 Z4`` with 1-based sites, or ``I``."""
        parts = [f"X{a + 1}" for a in self.x_sites()] + [f"Z{a + 1}" for a in self.z_sites()]
        return " ".join(parts) or "I"


Term = tuple[float, PauliString]


class TermSum(BaseModel):
    """A Hermitian operator sum_k c_k P_k with real coefficients.

    Use :meth:`build` to construct one: duplicate strings are merged exactly and
    exact zeros are dropped, keeping the order of first appearance.
    """

    model_config = ConfigDict(frozen=True)

    n_sites: int = Field(ge=0)
    terms: tuple[Term, ...] = ()

    @model_validator(mode="after")
    def _check_sites(self) -> "TermSum":
        for _, string in self.terms:
            if string.n_sites != self.n_sites:
                raise SizeMismatchError(
                    f"Term on {string.n_sites} sites in a sum on {self.n_sites} sites"
                )
        return self

    @classmethod
    def build(cls, n_sites: int, terms: Iterable[Term]) -> "TermSum":
        merged: dict[tuple[int, int], float] = {}
        for coeff, string in terms:
            if string.n_sites != n_sites:
                raise SizeMismatchError(
                    f"Term on {string.n_sites} sites in a sum on {n_sites} sites"
                )
            key = (string.x, string.z)
            merged[key] = merged.get(key, 0.0) + float(coeff)
        return cls(
            n_sites=n_sites,
            terms=tuple(
                (c, PauliString(n_sites=n_sites, x=x, z=z))
                for (x, z), c in merged.items()
                if c != 0.0
            ),
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "TermSum") -> "TermSum":
        if other.n_sites != self.n_sites:
            raise SizeMismatchError("Cannot add sums on different numbers of sites")
        return TermSum.build(self.n_sites, (*self.terms, *other.terms))

    def scaled(self, factor: float) -> "TermSum":
        return TermSum.build(self.n_sites, ((factor * c, p) for c, p in self.terms))

    def coefficient(self, string: PauliString) -> float:
        for c, p in self.terms:
            if p.x == string.x and p.z == string.z:
                return c
        return 0.0

    def x_terms(self) -> list[Term]:
        return [(c, p) for c, p in self.terms if p.is_x_string and not p.is_identity]

    def z_terms(self) -> list[Term]:
        return [(c, p) for c, p in self.terms if p.is_z_string and not p.is_identity]

    def norm_bound(self) -> float:
        """Upper bound sum_k |c_k| on the operator norm."""
        return sum(abs(c) for c, _ in self.terms)
