"""Shared fixtures. Hypothesis runs derandomized so repeated runs are identical."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from algtensor import QQ, Tensor, nf_create, unit_tensor

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repro")

# PASS/FAIL lines from the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_W(field=QQ):
    return Tensor.from_entries((2, 2, 2), {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1}, field)


@pytest.fixture
def W():
    return make_W()


@pytest.fixture
def unit2():
    return unit_tensor(2, 3)


@pytest.fixture(scope="session")
def sqrt2():
    return nf_create([-2, 0, 1])


@pytest.fixture(scope="session")
def gauss():
    return nf_create([1, 0, 1], "i")


@pytest.fixture(scope="session")
def cbrt2():
    return nf_create([-2, 0, 0, 1])
