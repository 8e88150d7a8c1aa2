import os

import pytest
from hypothesis import HealthCheck, settings

from omlq import builtin

settings.register_profile(
    "repo",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


@pytest.fixture(scope="session")
def mo2():
    return builtin("mo2")


@pytest.fixture(scope="session")
def lantern():
    return builtin("chinese_lantern")


@pytest.fixture(scope="session")
def bool3():
    return builtin("boolN:3")
