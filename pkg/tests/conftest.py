import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def limited_base():
    from techrace.scenarios import build_preset

    return build_preset("limited/baseline/no-opp")


@pytest.fixture
def transformative_opp():
    from techrace.scenarios import build_preset

    return build_preset("transformative/baseline/opp")
