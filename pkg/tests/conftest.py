"""
Shared fixtures and the --runslow switch for exhaustive sweeps
"""

import pytest

from helpers import atlas


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run exhaustive sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def small_atlas():
    """All graphs of order 1..6"""
    return atlas(6)
