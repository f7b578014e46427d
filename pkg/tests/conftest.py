import pytest

from selfdual_forge.hermitian import generate_m2_random


@pytest.fixture(scope="session")
def m2_good():
    """One big-field component whose binary lift has distance >= 16."""
    return generate_m2_random(seed=20240, count=1, min_binary_distance=16)[0]


@pytest.fixture(scope="session")
def m2_batch():
    """Five unfiltered big-field components for property suites."""
    return generate_m2_random(seed=777, count=5, min_binary_distance=0)
