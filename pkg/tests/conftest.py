"""
Shared fixtures and the hypothesis profile.
"""

import pytest
from hypothesis import HealthCheck, settings

from app.core.exceptional import ExceptionalConfig

settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("deterministic")


@pytest.fixture
def chain_config():
    """Two curves, E1^2 = -2, E2^2 = -1, meeting once (resolution of nu(1,2))."""
    return ExceptionalConfig.build([[-2, 1], [1, -1]])


@pytest.fixture
def a2_config():
    """The A2 graph."""
    return ExceptionalConfig.build([[-2, 1], [1, -2]])


@pytest.fixture
def two_branch_config():
    """Two disjoint (-1)-curves on separate branches with weights 1 and 2."""
    return ExceptionalConfig.build(
        [[-1, 0], [0, -1]], branches=[[0], [1]], weights=[1, 2]
    )
