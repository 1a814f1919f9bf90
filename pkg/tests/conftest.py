"""Shared test configuration.

Numerical property tests get a profile without deadlines: individual
examples are cheap but the first call into numpy/scipy can be slow enough
to trip hypothesis' flakiness heuristics.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "numerics",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numerics")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
