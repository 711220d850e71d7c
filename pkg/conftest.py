import pytest

from hexanet.services.generator import MatrixGenerator
from hexanet.services.minors import ExactMatrix


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size randomized suites")


@pytest.fixture
def generator():
    return MatrixGenerator(seed=42)


@pytest.fixture
def sample_matrix():
    """det = -3; every principal and odd minor is nonzero"""
    return ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])


@pytest.fixture
def small_matrix():
    return ExactMatrix.from_rows([[2, 3], [5, 7]])
