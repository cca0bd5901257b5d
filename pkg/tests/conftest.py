import pytest
from hypothesis import HealthCheck, settings

from quotring import Ideal, integers, preset

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# filled by tests/test_acceptance.py, echoed in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def Z():
    return integers()


@pytest.fixture(scope="session")
def Zs():
    return preset("Zsqrt10")


@pytest.fixture(scope="session")
def Zi():
    return preset("Zi")


@pytest.fixture(scope="session")
def p2(Zs):
    """The prime (2, sqrt10) over 2 in Z[sqrt10]."""
    return Ideal.from_generators(Zs, [2, [0, 1]])
