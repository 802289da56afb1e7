"""
Shared fixtures
"""

import pytest

from src.core.constants import IDENTICAL_ORDER_RANKINGS
from src.model.profile import Profile
from src.verify.counterexample import build_counterexample_profile


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweeps and n=6 enumeration")


@pytest.fixture
def identical_order_profile() -> Profile:
    """Three agents, all a > b > c; agent 2 feels (b,c) more than (a,b)."""
    return Profile.from_rankings(IDENTICAL_ORDER_RANKINGS, 3)


@pytest.fixture(scope="session")
def five_agent_profile() -> Profile:
    return build_counterexample_profile()
