"""Unit tests for GF(2) linear algebra."""

import itertools

import numpy as np
import pytest

from xordual.gf2 import (
    BitMatrix,
    BitVector,
    format_matrix,
    in_row_space,
    inverse,
    kernel_basis,
    left_inverse,
    nullspace,
    parse_matrix,
    rank2,
    row_basis,
    solve2,
)
from xordual.utils.errors import (
    DependentRowsError,
    ForcedRowsNotABasisError,
    InconsistentInputsError,
    InstanceFormatError,
)

# incidence matrix of the six-spin closure, edges (1,2,3), (1,4,6), (2,4,5), (3,5,6)
CLOSURE_H = BitMatrix.from_strings(["111000", "100101", "010110", "001011"])


def random_full_rank(rng, rows, cols):
    while True:
        m = BitMatrix.from_rows(rng.integers(0, 2, size=(rows, cols)).tolist())
        if rank2(m) == rows:
            return m


class TestBitVector:
    """Tests for BitVector."""

    def test_from_string_column_zero_first(self):
        """Test the first character is column 0."""
        v = BitVector.from_string("1101")
        assert v.bits == 0b1011
        assert v.to_list() == [1, 1, 0, 1]
        assert v.to_string() == "1101"

    def test_padding_rejected(self):
        """Test bits beyond the length are rejected."""
        with pytest.raises(ValueError):
            BitVector(length=2, bits=0b100)

    def test_dot_and_xor(self):
        """Test dot parity and addition."""
        a = BitVector.from_string("1110")
        b = BitVector.from_string("0111")
        assert a.dot(b) == 0
        assert (a ^ b).to_string() == "1001"
        assert a.weight == 3


class TestRank:
    """Tests for rank2."""

    def test_closure_rank(self):
        """Test the six-spin closure has rank 3."""
        assert rank2(CLOSURE_H) == 3

    def test_identity(self):
        """Test full rank of the identity."""
        assert rank2(BitMatrix.identity(4)) == 4

    def test_zero(self):
        """Test rank of a zero matrix."""
        assert rank2(BitMatrix.zeros(3, 5)) == 0

    def test_input_untouched(self):
        """Test rank2 leaves its argument unchanged."""
        before = CLOSURE_H.row_bits
        rank2(CLOSURE_H)
        assert CLOSURE_H.row_bits == before


class TestRowBasis:
    """Tests for row_basis."""

    def test_greedy(self):
        """Test the greedy scan keeps the first three rows."""
        basis = row_basis(CLOSURE_H)
        assert basis.independent == (0, 1, 2)
        assert basis.dependent == (3,)
        assert basis.f.to_strings() == ["111"]

    def test_forced(self):
        """Test forcing the last three rows expresses the first through all of them."""
        basis = row_basis(CLOSURE_H, forced_rows=[1, 2, 3])
        assert basis.independent == (1, 2, 3)
        assert basis.dependent == (0,)
        assert basis.f.to_strings() == ["111"]
        assert basis.pivots == (0, 1, 2)

    def test_identity_has_no_dependent_rows(self):
        """Test a full-rank matrix has an empty F."""
        basis = row_basis(BitMatrix.identity(4))
        assert basis.independent == (0, 1, 2, 3)
        assert basis.f.n_rows == 0

    def test_reconstruction(self):
        """Test every dependent row equals its F-combination of the basis rows."""
        rng = np.random.default_rng(7)
        a = BitMatrix.from_rows(rng.integers(0, 2, size=(8, 6)).tolist())
        basis = row_basis(a)
        rebuilt = basis.f.matmul(basis.s_a)
        for k, d in enumerate(basis.dependent):
            assert rebuilt.row_bits[k] == a.row_bits[d]
        assert rank2(a) == a.n_rows - len(basis.dependent)

    def test_forced_dependent_rows(self):
        """Test dependent forced rows are rejected."""
        a = BitMatrix.from_strings(["110", "110", "011"])
        with pytest.raises(ForcedRowsNotABasisError):
            row_basis(a, forced_rows=[0, 1])

    def test_forced_rows_not_spanning(self):
        """Test forced rows that miss a direction are rejected."""
        with pytest.raises(ForcedRowsNotABasisError) as exc_info:
            row_basis(CLOSURE_H, forced_rows=[0, 1])
        assert exc_info.value.rows == (0, 1)


class TestLeftInverse:
    """Tests for left_inverse."""

    def test_closure_forced_basis(self):
        """Test Z = [I | 0] for the basis rows 2, 3, 4."""
        basis = row_basis(CLOSURE_H, forced_rows=[1, 2, 3])
        z = left_inverse(basis.s_a)
        assert z.to_strings() == ["100000", "010000", "001000"]

    def test_identity(self):
        """Test the identity is its own left inverse."""
        assert left_inverse(BitMatrix.identity(5)) == BitMatrix.identity(5)

    def test_random_full_rank(self):
        """Test Z . S_A^T = I and Z vanishes off the pivot columns."""
        rng = np.random.default_rng(11)
        s_a = random_full_rank(rng, 5, 9)
        z = left_inverse(s_a)
        assert z.matmul(s_a.transpose()) == BitMatrix.identity(5)
        pivots = row_basis(s_a).pivots
        pivot_mask = sum(1 << p for p in pivots)
        assert all(row & ~pivot_mask == 0 for row in z.row_bits)

    def test_dependent_rows(self):
        """Test dependent rows are rejected."""
        with pytest.raises(DependentRowsError):
            left_inverse(BitMatrix.from_strings(["1100", "1100"]))

    def test_inverse_singular(self):
        """Test inverse rejects a singular matrix."""
        with pytest.raises(DependentRowsError):
            inverse(BitMatrix.from_strings(["11", "11"]))


class TestKernelBasis:
    """Tests for kernel_basis."""

    def test_closure_charges(self):
        """Test the canonical kernel rows of the six-spin closure."""
        basis = row_basis(CLOSURE_H, forced_rows=[1, 2, 3])
        charges = kernel_basis(CLOSURE_H, basis, left_inverse(basis.s_a))
        assert charges.to_strings() == ["110100", "011010", "101001"]

    def test_full_rank_square(self):
        """Test a full-rank square matrix has an empty kernel."""
        a = BitMatrix.identity(3)
        basis = row_basis(a)
        assert kernel_basis(a, basis, left_inverse(basis.s_a)).n_rows == 0

    def test_single_row(self):
        """Test the kernel of (1,1,1,0) against all sixteen vectors."""
        a = BitMatrix.from_strings(["1110"])
        basis = row_basis(a)
        charges = kernel_basis(a, basis, left_inverse(basis.s_a))
        assert charges.n_rows == 3
        assert rank2(charges) == 3
        annihilated = [
            bits for bits in range(16) if not (a.row_bits[0] & bits).bit_count() & 1
        ]
        spanned = {
            _combine(coeffs, charges.row_bits)
            for coeffs in itertools.product((0, 1), repeat=3)
        }
        assert spanned == set(annihilated)

    def test_rows_annihilated(self):
        """Test every kernel row is annihilated by A on a random instance."""
        rng = np.random.default_rng(3)
        a = BitMatrix.from_rows(rng.integers(0, 2, size=(6, 10)).tolist())
        basis = row_basis(a)
        charges = kernel_basis(a, basis, left_inverse(basis.s_a))
        assert charges.n_rows == 10 - rank2(a)
        assert rank2(charges) == charges.n_rows
        for row in charges.rows():
            assert a.apply(row).bits == 0

    def test_inconsistent_z(self):
        """Test a wrong Z is rejected."""
        basis = row_basis(CLOSURE_H)
        with pytest.raises(InconsistentInputsError):
            kernel_basis(CLOSURE_H, basis, BitMatrix.zeros(3, 6))


def _combine(coeffs, rows):
    value = 0
    for c, row in zip(coeffs, rows):
        if c:
            value ^= row
    return value


class TestSolve:
    """Tests for solve2."""

    def test_homogeneous(self):
        """Test y = 0 gives x = 0 and the full kernel."""
        result = solve2(CLOSURE_H, BitVector(length=4))
        assert result.satisfiable
        assert result.solution == BitVector(length=6)
        assert result.kernel_dim == 3

    def test_inconsistent(self):
        """Test an odd total parity on the closure is unsatisfiable."""
        result = solve2(CLOSURE_H, BitVector.from_string("1000"))
        assert not result.satisfiable
        assert result.solution is None
        for x in range(64):
            assert CLOSURE_H.apply(BitVector(length=6, bits=x)).to_string() != "1000"

    def test_particular_and_kernel(self):
        """Test A x = y for the particular solution and A k = 0 for the kernel."""
        rng = np.random.default_rng(5)
        a = BitMatrix.from_rows(rng.integers(0, 2, size=(5, 8)).tolist())
        x_true = BitVector.from_list(rng.integers(0, 2, size=8).tolist())
        y = a.apply(x_true)
        result = solve2(a, y)
        assert result.satisfiable
        assert a.apply(result.solution) == y
        for k in result.kernel.rows():
            assert a.apply(k).bits == 0

    def test_length_mismatch(self):
        """Test a right-hand side of the wrong length."""
        with pytest.raises(ValueError):
            solve2(CLOSURE_H, BitVector(length=3))

    def test_in_row_space(self):
        """Test membership of the sum of three rows and of a unit vector."""
        total = BitVector(length=6, bits=CLOSURE_H.row_bits[0] ^ CLOSURE_H.row_bits[1])
        assert in_row_space(CLOSURE_H, total)
        assert not in_row_space(CLOSURE_H, BitVector.from_string("100000"))

    def test_nullspace_dimension(self):
        """Test nullspace has N - r rows."""
        assert nullspace(CLOSURE_H).n_rows == 3


class TestCodec:
    """Tests for the textual BitMatrix form."""

    def test_format(self):
        """Test the header and row lines."""
        assert format_matrix(CLOSURE_H).splitlines() == [
            "4 6",
            "111000",
            "100101",
            "010110",
            "001011",
        ]

    def test_parse(self):
        """Test parsing the formatted text back."""
        assert parse_matrix("2 3\n101\n011\n") == BitMatrix.from_strings(["101", "011"])

    def test_bad_header(self):
        """Test a malformed header."""
        with pytest.raises(InstanceFormatError) as exc_info:
            parse_matrix("2\n101\n")
        assert exc_info.value.line == 1

    def test_bad_row_width(self):
        """Test a row of the wrong width."""
        with pytest.raises(InstanceFormatError) as exc_info:
            parse_matrix("1 3\n10\n")
        assert exc_info.value.line == 2
