import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from graphprim.fixtures import FIXTURES, fixture, random_corpus  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def named():
    return {name: fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def corpus(named):
    """The 11 named fixtures followed by 500 seeded random graphs (<= 6 vertices)."""
    return list(named.values()) + random_corpus(500)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
