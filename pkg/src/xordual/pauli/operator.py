"""Matrix-free action of term sums on state vectors.

Basis state ``b`` has site ``a`` up (Z = +1) when bit ``a`` of ``b`` is zero. A string
X^x Z^z maps |b> to (-1)^|b & z| |b ^ x>.
"""

import logging

import numpy as np

from ..utils.errors import MalformedModelError, SizeMismatchError
from .algebra import commutes
from .models import PauliString, TermSum

logger = logging.getLogger(__name__)


def z_signs(index: np.ndarray, z: int) -> np.ndarray:
    """(-1)^popcount(index & z) as float64."""
    return 1.0 - 2.0 * (np.bitwise_count(index & z) & 1)


class PauliOperator:
    """A term sum compiled for repeated matvecs.

    Terms without X factors are summed into one diagonal. Terms sharing an X-mask
    are grouped into one weighted flip; single-site flips are done by reshaping
    instead of gathering.
    """

    def __init__(self, termsum: TermSum):
        self.termsum = termsum
        self.n_sites = termsum.n_sites
        self.dim = 1 << self.n_sites
        self._index = np.arange(self.dim, dtype=np.int64)

        diagonal = np.zeros(self.dim)
        has_diagonal = False
        grouped: dict[int, float | np.ndarray] = {}
        for coeff, string in termsum.terms:
            weight: float | np.ndarray = coeff
            if string.z:
                weight = coeff * z_signs(self._index, string.z)
            if string.x == 0:
                diagonal += weight
                has_diagonal = True
            else:
                grouped[string.x] = grouped.get(string.x, 0.0) + weight

        self._diagonal = diagonal if has_diagonal else None
        self._flips = list(grouped.items())

    @property
    def shape(self) -> tuple[int, int]:
        return self.dim, self.dim

    def diagonal(self) -> np.ndarray:
        """Diagonal of the operator in the computational basis."""
        return np.zeros(self.dim) if self._diagonal is None else self._diagonal.copy()

    def _flip(self, v: np.ndarray, mask: int) -> np.ndarray:
        """v[b ^ mask] for every b."""
        if mask & (mask - 1) == 0:
            a = mask.bit_length() - 1
            rest = v.shape[1:]
            blocks = v.reshape(self.dim >> (a + 1), 2, 1 << a, *rest)
            return blocks[:, ::-1].reshape(v.shape)
        return v[self._index ^ mask]

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """H v for a vector of length 2^n or a (2^n, m) block of vectors.

        Raises:
            SizeMismatchError: If the leading dimension is not 2^n.
        """
        v = np.asarray(v)
        if v.ndim not in (1, 2) or v.shape[0] != self.dim:
            raise SizeMismatchError(f"State of shape {v.shape} for an operator of dim {self.dim}")
        if self._diagonal is None:
            out = np.zeros(v.shape, dtype=np.result_type(v, np.float64))
        elif v.ndim == 1:
            out = self._diagonal * v
        else:
            out = self._diagonal[:, None] * v
        for mask, weight in self._flips:
            if isinstance(weight, np.ndarray):
                source = weight * v if v.ndim == 1 else weight[:, None] * v
                out += self._flip(source, mask)
            else:
                out += weight * self._flip(v, mask)
        return out

    __matmul__ = matvec

    def to_dense(self) -> np.ndarray:
        return self.matvec(np.eye(self.dim))


def apply(termsum: TermSum, state: np.ndarray) -> np.ndarray:
    """y = H x for one state vector (or a block of them)."""
    return PauliOperator(termsum).matvec(state)


class ParitySector:
    """An operator restricted to the eigenspace X^mask = value of an X-string symmetry.

    Sector basis vectors are (|b> + value |b ^ mask>) / sqrt(2) for the states ``b``
    whose bit at the highest site of ``mask`` is zero.

    Raises:
        MalformedModelError: If some term does not commute with the symmetry.
    """

    def __init__(self, operator: PauliOperator, mask: int, value: int):
        if mask == 0 or mask >> operator.n_sites:
            raise MalformedModelError(f"Symmetry mask {mask:#x} does not fit the operator")
        if value not in (1, -1):
            raise MalformedModelError(f"Symmetry eigenvalue must be +1 or -1, got {value}")
        symmetry = PauliString(n_sites=operator.n_sites, x=mask)
        for _, string in operator.termsum.terms:
            if not commutes(string, symmetry):
                raise MalformedModelError(f"Term {string.label()} breaks the X-string symmetry")

        self.operator = operator
        self.mask = mask
        self.value = value
        top = 1 << (mask.bit_length() - 1)
        index = np.arange(operator.dim, dtype=np.int64)
        self._reps = index[(index & top) == 0]
        self._partners = self._reps ^ mask
        self.dim = len(self._reps)
        logger.debug("[Spectrum] Parity sector %+d of dim %d", value, self.dim)

    @property
    def shape(self) -> tuple[int, int]:
        return self.dim, self.dim

    def _embed(self, u: np.ndarray) -> np.ndarray:
        v = np.zeros((self.operator.dim, *u.shape[1:]), dtype=np.result_type(u, np.float64))
        v[self._reps] = u
        v[self._partners] = self.value * u
        return v

    def matvec(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u)
        if u.shape[0] != self.dim:
            raise SizeMismatchError(f"Sector vector of shape {u.shape}, expected dim {self.dim}")
        return self.operator.matvec(self._embed(u))[self._reps]

    __matmul__ = matvec

    def lift(self, u: np.ndarray) -> np.ndarray:
        """Sector coordinates to a full state vector of the same norm."""
        return self._embed(np.asarray(u)) / np.sqrt(2.0)

    def to_dense(self) -> np.ndarray:
        return self.matvec(np.eye(self.dim))
