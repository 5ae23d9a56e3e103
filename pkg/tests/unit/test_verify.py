"""Unit tests for the verification oracles and suites."""

import pytest

from xordual.duality import dualize
from xordual.utils.errors import ConfigError, TooLargeError
from xordual.verify import (
    build_tasks,
    check_worked_example,
    check_charge_commutation,
    check_classical_degeneracy,
    check_embedding,
    check_relabeling,
    check_sector_decomposition,
    multiset_residual,
    run_suite,
)
from xordual.xorsat import generate_tree, make_couplings, with_couplings


class TestResidual:
    """Tests for multiset_residual."""

    def test_order_free(self):
        """Test the comparison ignores order."""
        assert multiset_residual([2.0, 0.0, 1.0], [0.0, 1.0, 2.0 + 1e-12]) == pytest.approx(1e-12)

    def test_size_mismatch(self):
        """Test multisets of different sizes never match."""
        assert multiset_residual([0.0], [0.0, 0.0]) == float("inf")


class TestChecks:
    """Tests for the individual checks."""

    def test_worked_example(self):
        """Test the six-spin worked example."""
        result = check_worked_example()
        assert result.passed, result.detail
        assert result.detail == "all artifacts match"

    def test_sector_decomposition(self, tree2):
        """Test merged sectors of the nine-spin tree."""
        result = check_sector_decomposition(tree2, (0.3, 0.7))
        assert result.passed
        assert result.max_residual < 1e-8

    def test_sector_decomposition_oracle_path(self, closure1):
        """Test the sector-oracle path when the dense limit is tiny."""
        result = check_sector_decomposition(closure1, (0.5,), dense_limit=16)
        assert result.passed

    def test_sector_decomposition_lowest_levels(self, tree2):
        """Test the iterative lowest levels of the full model join the comparison."""
        result = check_sector_decomposition(tree2, (0.5,), dense_limit=16)
        assert result.passed, result.detail
        assert "lowest 64 checked against the full model" in result.detail

    def test_sector_decomposition_too_large(self):
        """Test the spin bound."""
        with pytest.raises(TooLargeError):
            check_sector_decomposition(generate_tree(3), (0.5,))

    def test_commutation(self, closure2):
        """Test the charges of the fifteen-spin closure commute with H(s)."""
        result = check_charge_commutation(closure2, s_values=(0.2, 0.8))
        assert result.passed
        assert result.name == "charge_commutation"

    def test_commutation_corrupted(self, tree2):
        """Test a corrupted charge is caught and the negative control passes."""
        result = check_charge_commutation(tree2, corrupt=True)
        assert not result.within_tolerance
        assert result.expect_failure
        assert result.passed

    def test_commutation_symplectic_only(self):
        """Test large instances skip the numeric commutator."""
        result = check_charge_commutation(generate_tree(4), max_sites=10)
        assert result.passed
        assert "symplectic only" in result.detail

    def test_embedding(self, dual_closure1):
        """Test the embedding at physical parity."""
        assert check_embedding(dual_closure1, (0.3, 0.65)).passed

    def test_embedding_wrong_parity(self, dual_closure1):
        """Test the unphysical parity differs and is reported as expected."""
        result = check_embedding(dual_closure1, (0.3,), parity_value=-1)
        assert result.name == "embedding_wrong_parity"
        assert not result.within_tolerance
        assert result.passed

    def test_embedding_too_large(self, closure2):
        """Test the site bound."""
        with pytest.raises(TooLargeError):
            check_embedding(dualize(closure2), (0.5,), max_sites=4)

    @pytest.mark.parametrize("g", [1, 2])
    def test_degeneracy_tree(self, g):
        """Test 2^(N - r) classical ground states on trees."""
        result = check_classical_degeneracy(generate_tree(g))
        assert result.passed, result.detail

    def test_degeneracy_unsat(self, closure1_unsat):
        """Test one violated edge: E0 = 2 and 32 ground states."""
        result = check_classical_degeneracy(closure1_unsat)
        assert result.passed, result.detail
        assert "E0=2 degeneracy=32" in result.detail

    def test_degeneracy_negative_tree(self, tree2):
        """Test negative couplings on a tree gauge away."""
        inst = with_couplings(tree2, [-1, 1, -1, -1])
        result = check_classical_degeneracy(inst)
        assert result.passed, result.detail
        assert result.detail.startswith("case i:")

    def test_relabeling(self, closure1):
        """Test a reversed labeling keeps the spectra."""
        assert check_relabeling(closure1, [6, 5, 4, 3, 2, 1]).passed


class TestSuites:
    """Tests for suite assembly and runs."""

    def test_unknown_suite(self, settings):
        """Test an unknown suite name."""
        with pytest.raises(ConfigError):
            build_tasks("full", settings)

    def test_acceptance_is_larger(self, settings):
        """Test the larger suite extends the quick one."""
        assert len(build_tasks("acceptance", settings)) > len(build_tasks("quick", settings))

    def test_paper_alias(self, settings):
        """Test the paper suite name builds the acceptance checks."""
        assert len(build_tasks("paper", settings)) == len(build_tasks("acceptance", settings))

    def test_quick_passes(self, settings):
        """Test every quick check passes, negative controls included."""
        report = run_suite("quick", settings)
        assert report.passed, [c.name for c in report.failures()]
        assert report.seed == 1234
        assert len(report.checks) == len(build_tasks("quick", settings))
        names = {c.name for c in report.checks}
        assert {"charge_commutation_corrupted", "embedding_wrong_parity"} <= names

    def test_report_dump(self, settings):
        """Test the report serializes with the computed verdicts."""
        report = run_suite("quick", settings)
        data = report.model_dump()
        assert data["passed"] is True
        assert all("passed" in check for check in data["checks"])

    @pytest.mark.slow
    def test_acceptance_passes(self, settings):
        """Test the full acceptance suite."""
        assert run_suite("acceptance", settings).passed


def test_unsat_couplings_fixture(closure1):
    """Test the single negative coupling sits on the redundant edge."""
    couplings = make_couplings(closure1, "unsat")
    assert couplings == (1, 1, 1, -1)
