import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from floorq.mobius import mu1_initial_table  # noqa: E402


@pytest.fixture(scope="session")
def table_1e5():
    return mu1_initial_table(10**5)


@pytest.fixture(scope="session")
def table_1e6():
    return mu1_initial_table(10**6)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
