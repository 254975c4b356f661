"""Conftest for the worked examples shared by several test modules."""
import pytest
from helberg.codebook import CodeParams


@pytest.fixture(scope="session")
def binary_params() -> CodeParams:
    # n=10, d=3, q=2: modulus 600
    return CodeParams.create(10, 3, 2, 381)


@pytest.fixture(scope="session")
def ternary_params() -> CodeParams:
    # n=10, d=3, q=3: modulus 49059
    return CodeParams.create(10, 3, 3, 434)


@pytest.fixture(scope="session")
def quaternary_params() -> CodeParams:
    # n=9, d=2, q=4: modulus 181861
    return CodeParams.create(9, 2, 4, 147376)
