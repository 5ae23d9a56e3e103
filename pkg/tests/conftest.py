"""Pytest configuration and fixtures."""

import pytest

from xordual.config.settings import Settings
from xordual.duality import dualize
from xordual.spectrum.models import SolverOptions
from xordual.xorsat import generate_closure, generate_tree, make_couplings, with_couplings


@pytest.fixture
def settings():
    """Create test settings: serial execution, fixed seed."""
    return Settings(workers=1, seed=1234, log_level="DEBUG")


@pytest.fixture
def options():
    """Solver options with the default tolerances."""
    return SolverOptions(seed=1234)


@pytest.fixture
def tree1():
    """Single edge {1, 2, 3}."""
    return generate_tree(1)


@pytest.fixture
def tree2():
    """Nine spins, four edges."""
    return generate_tree(2)


@pytest.fixture
def closure1():
    """The six-spin closure with edges (1,2,3), (1,4,6), (2,4,5), (3,5,6)."""
    return generate_closure(1)


@pytest.fixture
def closure1_unsat(closure1):
    """Six-spin closure with one -1 coupling on its redundant edge."""
    return with_couplings(closure1, make_couplings(closure1, "unsat"))


@pytest.fixture
def closure2():
    """Fifteen spins, ten edges."""
    return generate_closure(2)


@pytest.fixture
def dual_tree2(tree2):
    return dualize(tree2)


@pytest.fixture
def dual_closure1(closure1):
    return dualize(closure1)
