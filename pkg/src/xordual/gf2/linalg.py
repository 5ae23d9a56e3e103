"""Dense GF(2) linear algebra on packed rows.

Gaussian elimination works on rows stored as integers; the pivot of a reduced
row is its lowest set bit, i.e. its leftmost column.
"""

import logging
from collections.abc import Sequence

from ..utils.errors import (
    DependentRowsError,
    ForcedRowsNotABasisError,
    InconsistentInputsError,
)
from .models import BitMatrix, BitVector, RowBasis, SolveResult, iter_bits

logger = logging.getLogger(__name__)


def _eliminate(rows: Sequence[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduce rows to reduced row echelon form, pivoting on columns < n_cols.

    Returns:
        The reduced rows (pivot rows first, then rows with no pivot in the
        first ``n_cols`` columns) and the ordered pivot columns.
    """
    work = list(rows)
    pivots: list[int] = []
    top = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work, pivots


class _Echelon:
    """Incremental echelon basis that tracks how each basis vector was formed."""

    def __init__(self) -> None:
        self._by_low_bit: dict[int, tuple[int, int]] = {}
        self.size = 0

    def reduce(self, value: int) -> tuple[int, int]:
        """Return (residual, combination) with value = residual ^ rows(combination)."""
        combo = 0
        while value:
            low = value & -value
            entry = self._by_low_bit.get(low)
            if entry is None:
                break
            value ^= entry[0]
            combo ^= entry[1]
        return value, combo

    def add(self, residual: int, combo: int) -> None:
        """Insert a nonzero residual as basis vector number ``self.size``."""
        self._by_low_bit[residual & -residual] = (residual, combo ^ (1 << self.size))
        self.size += 1


def rank2(a: BitMatrix) -> int:
    """Rank of ``a`` over GF(2)."""
    _, pivots = _eliminate(a.row_bits, a.n_cols)
    return len(pivots)


def pivot_columns(a: BitMatrix) -> tuple[int, ...]:
    """Pivot columns of the reduced row echelon form of ``a``."""
    _, pivots = _eliminate(a.row_bits, a.n_cols)
    return tuple(pivots)


def row_basis(a: BitMatrix, forced_rows: Sequence[int] | None = None) -> RowBasis:
    """Select a basis of the row space of ``a`` and express the other rows in it.

    The default policy scans rows first to last and keeps a row iff it is
    independent of the rows kept so far.

    Args:
        a: The matrix.
        forced_rows: Optional 0-based row indices to use as the basis, in order.

    Returns:
        The basis rows ``s_a``, the remaining row indices and ``f`` with
        ``row_d(a) = f_d . s_a`` for every dependent row ``d``.

    Raises:
        ForcedRowsNotABasisError: If ``forced_rows`` are dependent or do not span.
    """
    echelon = _Echelon()
    independent: list[int] = []
    dependent: list[int] = []
    f_rows: list[int] = []

    if forced_rows is None:
        for i, value in enumerate(a.row_bits):
            residual, combo = echelon.reduce(value)
            if residual:
                echelon.add(residual, combo)
                independent.append(i)
            else:
                dependent.append(i)
                f_rows.append(combo)
    else:
        forced = tuple(forced_rows)
        if len(set(forced)) != len(forced) or any(not 0 <= i < a.n_rows for i in forced):
            raise ForcedRowsNotABasisError(
                f"Forced rows {forced} must be distinct indices below {a.n_rows}", rows=forced
            )
        for i in forced:
            residual, combo = echelon.reduce(a.row_bits[i])
            if not residual:
                raise ForcedRowsNotABasisError(
                    f"Forced row {i} depends on the rows before it", rows=forced
                )
            echelon.add(residual, combo)
            independent.append(i)
        chosen = set(forced)
        for i, value in enumerate(a.row_bits):
            if i in chosen:
                continue
            residual, combo = echelon.reduce(value)
            if residual:
                raise ForcedRowsNotABasisError(
                    f"Forced rows {forced} do not span row {i}", rows=forced
                )
            dependent.append(i)
            f_rows.append(combo)

    s_a = a.select_rows(independent)
    r = len(independent)
    basis = RowBasis(
        independent=tuple(independent),
        dependent=tuple(dependent),
        s_a=s_a,
        f=BitMatrix(n_cols=r, row_bits=tuple(f_rows)),
        pivots=pivot_columns(s_a),
    )
    logger.debug(
        "[GF2] Row basis: rank=%d dependent=%s pivots=%s", r, basis.dependent, basis.pivots
    )
    return basis


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse of a square matrix over GF(2).

    Raises:
        DependentRowsError: If ``m`` is singular.
    """
    n = m.n_rows
    if m.n_cols != n:
        raise DependentRowsError(f"Cannot invert a non-square {m.shape} matrix")
    augmented = [value | (1 << (n + i)) for i, value in enumerate(m.row_bits)]
    work, pivots = _eliminate(augmented, n)
    if len(pivots) != n:
        raise DependentRowsError("Matrix is singular over GF(2)")
    return BitMatrix(n_cols=n, row_bits=tuple(work[k] >> n for k in range(n)))


def left_inverse(s_a: BitMatrix) -> BitMatrix:
    """Left inverse of ``s_a`` transposed: ``Z . s_a^T = I`` over GF(2).

    Every row of ``Z`` vanishes outside the pivot columns of the reduced echelon
    form of ``s_a``, which makes ``Z`` unique.

    Raises:
        DependentRowsError: If the rows of ``s_a`` are linearly dependent.
    """
    r = s_a.n_rows
    pivots = pivot_columns(s_a)
    if len(pivots) != r:
        raise DependentRowsError(f"Rows of the {s_a.shape} matrix are linearly dependent")

    # B^T restricted to pivot columns: row k is column pivots[k] of s_a
    b_t = BitMatrix(n_cols=r, row_bits=tuple(s_a.column(p).bits for p in pivots))
    c = inverse(b_t)
    z_rows = []
    for value in c.row_bits:
        z = 0
        for k in iter_bits(value):
            z |= 1 << pivots[k]
        z_rows.append(z)
    return BitMatrix(n_cols=s_a.n_cols, row_bits=tuple(z_rows))


def kernel_basis(a: BitMatrix, basis: RowBasis, z: BitMatrix) -> BitMatrix:
    """Canonical kernel basis: one row per non-pivot column ``j``.

    Row ``j`` equals ``row_j(s_a^T . Z) + e_j``. On instances whose pivots are
    the first ``r`` columns this is the usual "rows r+1..N" convention.

    Raises:
        InconsistentInputsError: If ``z`` is not the left inverse of ``basis.s_a``.
    """
    s_a = basis.s_a
    r = s_a.n_rows
    if z.shape != s_a.shape or z.matmul(s_a.transpose()) != BitMatrix.identity(r):
        raise InconsistentInputsError("Z . S_A^T is not the identity")
    if a.n_cols != s_a.n_cols:
        raise InconsistentInputsError("Row basis does not belong to this matrix")

    pivot_set = set(basis.pivots)
    rows = []
    for j in range(a.n_cols):
        if j in pivot_set:
            continue
        value = 1 << j
        for alpha in range(r):
            if (s_a.row_bits[alpha] >> j) & 1:
                value ^= z.row_bits[alpha]
        rows.append(value)
    return BitMatrix(n_cols=a.n_cols, row_bits=tuple(rows))


def nullspace(a: BitMatrix) -> BitMatrix:
    """A basis of ``{x : a x = 0}``; one vector per free column, free entries unit."""
    work, pivots = _eliminate(a.row_bits, a.n_cols)
    return _nullspace_from_reduced(work, pivots, a.n_cols)


def _nullspace_from_reduced(work: list[int], pivots: list[int], n_cols: int) -> BitMatrix:
    pivot_set = set(pivots)
    rows = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        value = 1 << free
        for k, p in enumerate(pivots):
            if (work[k] >> free) & 1:
                value |= 1 << p
        rows.append(value)
    return BitMatrix(n_cols=n_cols, row_bits=tuple(rows))


def solve2(a: BitMatrix, y: BitVector) -> SolveResult:
    """Solve ``a x = y`` over GF(2) by Gaussian elimination.

    Inconsistency is reported through ``satisfiable``; the particular solution
    sets every free variable to zero.

    Raises:
        ValueError: If ``y`` does not have one entry per row of ``a``.
    """
    if y.length != a.n_rows:
        raise ValueError(f"Right-hand side has length {y.length}, expected {a.n_rows}")
    n = a.n_cols
    rhs_bit = 1 << n
    augmented = [
        value | (rhs_bit if (y.bits >> i) & 1 else 0) for i, value in enumerate(a.row_bits)
    ]
    work, pivots = _eliminate(augmented, n)
    kernel = _nullspace_from_reduced(work, pivots, n)

    if any(value == rhs_bit for value in work[len(pivots):]):
        return SolveResult(satisfiable=False, solution=None, kernel=kernel)

    x = 0
    for k, p in enumerate(pivots):
        if work[k] & rhs_bit:
            x |= 1 << p
    return SolveResult(satisfiable=True, solution=BitVector(length=n, bits=x), kernel=kernel)


def in_row_space(a: BitMatrix, v: BitVector) -> bool:
    """Whether ``v`` is a GF(2) combination of the rows of ``a``."""
    echelon = _Echelon()
    for value in a.row_bits:
        residual, combo = echelon.reduce(value)
        if residual:
            echelon.add(residual, combo)
    residual, _ = echelon.reduce(v.bits)
    return residual == 0
