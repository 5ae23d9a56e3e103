"""Unit tests for Pauli strings, term sums and compiled operators."""

import numpy as np
import pytest

from xordual.pauli import (
    ParitySector,
    PauliOperator,
    PauliString,
    TermSum,
    apply,
    commutes,
    dense_matrix,
    expectation_sector,
    format_term,
    format_terms,
    multiply,
    parse_terms,
)
from xordual.utils.errors import (
    InstanceFormatError,
    MalformedModelError,
    NotXStringError,
    SizeMismatchError,
    YProductError,
)


def ps(n, xs=(), zs=()):
    return PauliString.from_sites(n, xs, zs)


def random_termsum(rng, n, count):
    terms = []
    for _ in range(count):
        x = int(rng.integers(0, 1 << n))
        z = int(rng.integers(0, 1 << n)) & ~x
        terms.append((float(rng.normal()), PauliString(n_sites=n, x=x, z=z)))
    return TermSum.build(n, terms)


class TestPauliString:
    """Tests for PauliString."""

    def test_y_rejected(self):
        """Test X and Z on one site."""
        with pytest.raises(YProductError):
            PauliString(n_sites=2, x=1, z=1)

    def test_label(self):
        """Test 1-based labels and the identity."""
        assert ps(6, xs=(0, 1, 3)).label() == "X1 X2 X4"
        assert ps(3, zs=(2,)).label() == "Z3"
        assert PauliString.identity(3).label() == "I"

    def test_properties(self):
        """Test weight and kind flags."""
        string = ps(4, xs=(0,), zs=(2, 3))
        assert string.weight == 3
        assert not string.is_x_string
        assert not string.is_z_string
        assert ps(4, xs=(1,)).is_x_string


class TestAlgebra:
    """Tests for commutation, products and charge values."""

    def test_commutes(self):
        """Test overlap parity decides commutation."""
        assert not commutes(ps(3, xs=(0,)), ps(3, zs=(0, 1, 2)))
        assert commutes(ps(3, xs=(0, 1)), ps(3, zs=(0, 1, 2)))
        assert commutes(ps(3, zs=(0,)), ps(3, zs=(1,)))

    def test_commutes_matches_dense_commutator(self):
        """Test the symplectic rule against the dense commutator on random strings."""
        rng = np.random.default_rng(7)
        for _ in range(60):
            n = int(rng.integers(1, 7))
            strings = []
            for _ in range(2):
                x = int(rng.integers(0, 1 << n))
                strings.append(PauliString(n_sites=n, x=x, z=int(rng.integers(0, 1 << n)) & ~x))
            a, b = (dense_matrix(TermSum.build(n, [(1.0, p)])) for p in strings)
            assert commutes(*strings) == np.allclose(a @ b, b @ a)

    def test_commutes_size_mismatch(self):
        """Test strings on different sizes."""
        with pytest.raises(SizeMismatchError):
            commutes(ps(2, xs=(0,)), ps(3, xs=(0,)))

    def test_multiply_sign(self):
        """Test factors on different sites combine with sign +1; a shared site would be a Y."""
        product, sign = multiply(ps(2, zs=(0,)), ps(2, xs=(1,)))
        assert (product.x, product.z, sign) == (0b10, 0b01, 1)
        with pytest.raises(YProductError):
            multiply(ps(1, zs=(0,)), ps(1, xs=(0,)))

    def test_multiply_matches_dense(self):
        """Test the product string and sign against Kronecker products."""
        a = ps(3, xs=(0,), zs=(1,))
        b = ps(3, xs=(0,), zs=(2,))
        product, sign = multiply(a, b)
        lhs = dense_matrix(TermSum.build(3, [(1.0, a)])) @ dense_matrix(
            TermSum.build(3, [(1.0, b)])
        )
        rhs = sign * dense_matrix(TermSum.build(3, [(1.0, product)]))
        np.testing.assert_allclose(lhs, rhs)

    def test_expectation_sector(self):
        """Test the parity of flipped sites under each charge."""
        charges = [ps(6, xs=(0, 1, 3)), ps(6, xs=(1, 2, 4)), ps(6, xs=(0, 2, 5))]
        x_values = [1, 1, 1, -1, 1, -1]
        assert expectation_sector(charges, x_values) == [-1, 1, -1]

    def test_expectation_sector_rejects_z(self):
        """Test a charge with a Z factor."""
        with pytest.raises(NotXStringError):
            expectation_sector([ps(2, zs=(0,))], [1, 1])


class TestTermSum:
    """Tests for TermSum."""

    def test_merge_and_drop(self):
        """Test duplicates merge and exact zeros vanish."""
        x1 = ps(2, xs=(0,))
        total = TermSum.build(2, [(1.0, x1), (0.5, ps(2, zs=(1,))), (-1.0, x1)])
        assert len(total) == 1
        assert total.coefficient(ps(2, zs=(1,))) == 0.5

    def test_size_mismatch(self):
        """Test a term on the wrong number of sites."""
        with pytest.raises(SizeMismatchError):
            TermSum.build(2, [(1.0, ps(3, xs=(0,)))])

    def test_add_and_scale(self):
        """Test sums add termwise and scale."""
        a = TermSum.build(2, [(1.0, ps(2, xs=(0,)))])
        b = TermSum.build(2, [(2.0, ps(2, xs=(0,))), (1.0, ps(2, zs=(0, 1)))])
        total = (a + b).scaled(2.0)
        assert total.coefficient(ps(2, xs=(0,))) == 6.0
        assert len(total.x_terms()) == 1
        assert len(total.z_terms()) == 1
        assert total.norm_bound() == 8.0


class TestDumpFormat:
    """Tests for the term dump lines."""

    def test_format(self):
        """Test one line with 1-based sites."""
        assert format_term(-0.5, ps(4, xs=(0, 1), zs=(3,))) == "-0.5 X:1,2 Z:4"
        assert format_term(1.0, ps(2, zs=(1,))) == "1 X: Z:2"

    def test_parse_back(self):
        """Test parsing a dump with comments."""
        total = TermSum.build(3, [(-0.25, ps(3, xs=(0, 2))), (0.75, ps(3, zs=(1,)))])
        text = "# header\n" + format_terms(total)
        assert parse_terms(text, 3) == total

    def test_parse_bad_line(self):
        """Test a malformed line reports its number."""
        with pytest.raises(InstanceFormatError) as exc_info:
            parse_terms("1.0 X:1 Z:\nnonsense\n", 2)
        assert exc_info.value.line == 2


class TestPauliOperator:
    """Tests for the compiled matvec."""

    def test_matches_dense(self):
        """Test matvec against the Kronecker oracle on random sums."""
        rng = np.random.default_rng(0)
        total = random_termsum(rng, 5, 12)
        op = PauliOperator(total)
        v = rng.normal(size=32)
        np.testing.assert_allclose(op.matvec(v), dense_matrix(total) @ v, atol=1e-12)
        np.testing.assert_allclose(op.to_dense(), dense_matrix(total), atol=1e-12)

    def test_hermitian_symmetry(self):
        """Test <u|H v> equals <H u|v> on random vectors up to twelve sites."""
        rng = np.random.default_rng(3)
        for n in (3, 8, 12):
            op = PauliOperator(random_termsum(rng, n, 40))
            u, v = rng.normal(size=(2, 1 << n))
            hv = op.matvec(v)
            scale = np.linalg.norm(u) * np.linalg.norm(hv)
            assert abs(u @ hv - op.matvec(u) @ v) <= 1e-12 * scale

    def test_block_matvec(self):
        """Test a block of vectors equals column-wise matvecs."""
        rng = np.random.default_rng(1)
        op = PauliOperator(random_termsum(rng, 4, 8))
        block = rng.normal(size=(16, 3))
        expected = np.stack([op.matvec(block[:, j]) for j in range(3)], axis=1)
        np.testing.assert_allclose(op @ block, expected, atol=1e-12)

    def test_basis_convention(self):
        """Test Z_a reads bit a and X_a flips it."""
        op = PauliOperator(TermSum.build(3, [(1.0, ps(3, zs=(1,)))]))
        assert op.diagonal().tolist() == [1, 1, -1, -1, 1, 1, -1, -1]
        state = np.zeros(8)
        state[0b001] = 1.0
        flipped = apply(TermSum.build(3, [(1.0, ps(3, xs=(2,)))]), state)
        assert flipped[0b101] == 1.0

    def test_wrong_size(self):
        """Test a state of the wrong length."""
        op = PauliOperator(TermSum.build(2, [(1.0, ps(2, xs=(0,)))]))
        with pytest.raises(SizeMismatchError):
            op.matvec(np.ones(3))


class TestParitySector:
    """Tests for the X-string symmetry restriction."""

    def _model(self):
        # Ising ring in a transverse field, symmetric under X on all sites
        n = 4
        terms = [(-1.0, ps(n, zs=(a, (a + 1) % n))) for a in range(n)]
        terms += [(-0.7, ps(n, xs=(a,))) for a in range(n)]
        return TermSum.build(n, terms)

    def test_sectors_split_spectrum(self):
        """Test the two parity sectors together give the full spectrum."""
        total = self._model()
        op = PauliOperator(total)
        full = np.linalg.eigvalsh(dense_matrix(total))
        plus = np.linalg.eigvalsh(ParitySector(op, 0b1111, 1).to_dense())
        minus = np.linalg.eigvalsh(ParitySector(op, 0b1111, -1).to_dense())
        np.testing.assert_allclose(np.sort(np.concatenate([plus, minus])), full, atol=1e-10)
        assert len(plus) == 8

    def test_lift_is_eigenvector_of_symmetry(self):
        """Test a lifted vector has the requested parity and the same norm."""
        op = PauliOperator(self._model())
        sector = ParitySector(op, 0b1111, -1)
        u = np.random.default_rng(2).normal(size=sector.dim)
        v = sector.lift(u)
        parity = PauliOperator(TermSum.build(4, [(1.0, ps(4, xs=(0, 1, 2, 3)))]))
        np.testing.assert_allclose(parity.matvec(v), -v)
        assert np.linalg.norm(v) == pytest.approx(np.linalg.norm(u))

    def test_symmetry_breaking_term(self):
        """Test a Z term that anticommutes with the symmetry."""
        op = PauliOperator(TermSum.build(2, [(1.0, ps(2, zs=(0,)))]))
        with pytest.raises(MalformedModelError):
            ParitySector(op, 0b11, 1)
