"""Symplectic algebra of Pauli strings, the term dump format and a dense oracle."""

import re
from collections.abc import Sequence

import numpy as np

from ..utils.errors import InstanceFormatError, NotXStringError, SizeMismatchError, YProductError
from .models import PauliString, TermSum

_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_IDENTITY = np.eye(2)

_DUMP_LINE = re.compile(r"^\s*(\S+)\s+X:(\S*)\s+Z:(\S*)\s*$")


def _check_sizes(a: PauliString, b: PauliString) -> None:
    if a.n_sites != b.n_sites:
        raise SizeMismatchError(f"Strings on {a.n_sites} and {b.n_sites} sites")


def commutes(a: PauliString, b: PauliString) -> bool:
    """Whether ``a`` and ``b`` commute: the symplectic form x_a.z_b + z_a.x_b vanishes mod 2."""
    _check_sizes(a, b)
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) % 2 == 0


def multiply(a: PauliString, b: PauliString) -> tuple[PauliString, int]:
    """Product ``a . b`` as a string and a sign.

    Strings are ordered X-part first, so moving the Z factors of ``a`` past the
    X factors of ``b`` contributes (-1)^|z_a & x_b|.

    Raises:
        SizeMismatchError: If the strings act on different numbers of sites.
        YProductError: If the product carries X and Z on the same site.
    """
    _check_sizes(a, b)
    x, z = a.x ^ b.x, a.z ^ b.z
    if x & z:
        raise YProductError(f"Product of {a.label()} and {b.label()} contains a Y factor")
    sign = -1 if (a.z & b.x).bit_count() % 2 else 1
    return PauliString(n_sites=a.n_sites, x=x, z=z), sign


def expectation_sector(charges: Sequence[PauliString], x_values: Sequence[int]) -> list[int]:
    """Values of X-string charges on a product state of sigma^x eigenstates.

    Args:
        charges: Pure X-strings.
        x_values: sigma^x eigenvalue (+1 or -1) of every site, site 0 first.

    Raises:
        NotXStringError: If a charge carries a Z factor.
        SizeMismatchError: If a charge does not act on ``len(x_values)`` sites.
    """
    minus = 0
    for a, value in enumerate(x_values):
        if value not in (1, -1):
            raise ValueError(f"sigma^x eigenvalues are +1 or -1, got {value}")
        if value == -1:
            minus |= 1 << a
    values = []
    for charge in charges:
        if not charge.is_x_string:
            raise NotXStringError(f"Charge {charge.label()} is not a pure X-string")
        if charge.n_sites != len(x_values):
            raise SizeMismatchError(
                f"Charge on {charge.n_sites} sites, state on {len(x_values)} sites"
            )
        values.append(-1 if (charge.x & minus).bit_count() % 2 else 1)
    return values


def format_term(coeff: float, string: PauliString) -> str:
    """One dump line: ``coeff X:<sites> Z:<sites>`` with comma-separated 1-based sites."""
    xs = ",".join(str(a + 1) for a in string.x_sites())
    zs = ",".join(str(a + 1) for a in string.z_sites())
    return f"{coeff:.12g} X:{xs} Z:{zs}"


def format_terms(termsum: TermSum) -> str:
    return "".join(format_term(c, p) + "\n" for c, p in termsum.terms)


def parse_terms(text: str, n_sites: int) -> TermSum:
    """Read the dump format back; blank lines and ``#`` comments are skipped.

    Raises:
        InstanceFormatError: On a malformed line.
    """
    terms = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        match = _DUMP_LINE.match(raw)
        if match is None:
            raise InstanceFormatError(f"Bad term line {raw!r}", line=number)
        try:
            coeff = float(match.group(1))
            xs = [int(v) - 1 for v in match.group(2).split(",") if v]
            zs = [int(v) - 1 for v in match.group(3).split(",") if v]
            string = PauliString.from_sites(n_sites, xs, zs)
        except ValueError as e:
            raise InstanceFormatError(f"Bad term line {raw!r}: {e}", line=number) from e
        terms.append((coeff, string))
    return TermSum.build(n_sites, terms)


def string_matrix(string: PauliString) -> np.ndarray:
    """Dense matrix of one string; site 0 is the least significant bit of the basis index."""
    out = np.ones((1, 1))
    for a in reversed(range(string.n_sites)):
        if (string.x >> a) & 1:
            factor = _PAULI_X
        elif (string.z >> a) & 1:
            factor = _PAULI_Z
        else:
            factor = _IDENTITY
        out = np.kron(out, factor)
    return out


def dense_matrix(termsum: TermSum) -> np.ndarray:
    """Dense 2^n x 2^n matrix built from Kronecker products; an oracle for small n."""
    dim = 1 << termsum.n_sites
    out = np.zeros((dim, dim))
    for coeff, string in termsum.terms:
        out += coeff * string_matrix(string)
    return out
