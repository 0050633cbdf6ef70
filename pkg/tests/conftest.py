import os

import pytest
from hypothesis import HealthCheck, settings

from galois_locus.catalog import ballico_hefez, hermitian, klein_quartic

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def bh3():
    return ballico_hefez(3)


@pytest.fixture(scope="session")
def bh4():
    return ballico_hefez(4)


@pytest.fixture(scope="session")
def herm9():
    return hermitian(9)


@pytest.fixture(scope="session")
def klein():
    return klein_quartic()


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
