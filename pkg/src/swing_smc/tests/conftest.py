# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Test Fixtures
=============

Shared fixtures and the `--runslow` switch for the statistical acceptance
runs marked `slow`.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pytest

# Import | Local Modules
from swing_smc.conf import configure_settings
from swing_smc.kalman import LgSpec


# =============================================================================
# Hooks
# =============================================================================

def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow acceptance tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: statistical acceptance run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


# =============================================================================
# Fixtures
# =============================================================================

@pytest.fixture(autouse=True)
def reset_settings():
    configure_settings(None)
    yield
    configure_settings(None)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def scalar_spec():
    """X_1 ~ N(0, 1), X_t = rho X_{t-1} + N(0, q), Y_t = X_t + N(0, r); theta = (rho, q, r)."""

    def observation(s, theta):
        n = theta.shape[0]
        return np.zeros((n, 1)), np.ones((n, 1, 1)), theta[:, 2].reshape(n, 1, 1)

    def transition(s, theta):
        n = theta.shape[0]
        return theta[:, 0].reshape(n, 1, 1), theta[:, 1].reshape(n, 1, 1)

    def initial(theta):
        n = theta.shape[0]
        return np.zeros((n, 1)), np.ones((n, 1, 1))

    return LgSpec(d_x=1, d_y=1, observation=observation, transition=transition, initial=initial)
