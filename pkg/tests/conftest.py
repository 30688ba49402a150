import pytest

from crsatake.oracles import sweep_consistency

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def sweep4():
    return sweep_consistency(4)


@pytest.fixture(scope="session")
def sweep2():
    return sweep_consistency(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
