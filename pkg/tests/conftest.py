from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from convexcentre.linalg import Vector

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ACCEPTANCE: list = []


def rationals(bound: int = 6, den: int = 6):
    return st.builds(Fraction, st.integers(-bound * den, bound * den), st.integers(1, den))


def vectors(dim: int, bound: int = 6, den: int = 6):
    return st.lists(rationals(bound, den), min_size=dim, max_size=dim).map(Vector)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
