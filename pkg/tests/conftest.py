"""Shared fixtures: the 7-point running example and the census run."""

import time

import pytest

from cdhg import (
    cd_construct,
    make_cyclic,
    run_census,
    validate_hyperset,
)

FANO_MEMBERS = [[0, 1, 3], [0, 4, 5], [0, 2, 6]]
FANO_EDGES = {
    (0, 1, 3),
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (0, 4, 5),
    (1, 5, 6),
    (0, 2, 6),
}

# one "PASS criterion n: ..." line per acceptance criterion, echoed after
# the run so the verdicts are visible in plain pytest output
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fano_group():
    return make_cyclic(7)


@pytest.fixture(scope="session")
def fano_x(fano_group):
    return validate_hyperset(fano_group, FANO_MEMBERS)


@pytest.fixture(scope="session")
def fano_cd(fano_group, fano_x):
    return cd_construct(fano_group, fano_x)


@pytest.fixture(scope="session")
def full_census():
    """Default census sweep plus its wall-clock duration in seconds."""
    start = time.monotonic()
    result = run_census(max_order=8, max_member_size=3)
    return result, time.monotonic() - start
