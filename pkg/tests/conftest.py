import pytest

from dnachain.units import ANGSTROM, coupling_constant


@pytest.fixture(scope="session")
def k45():
    """K_eff at 4.5 angstrom, epsilon = 1, in PHz^2."""
    return coupling_constant(4.5 * ANGSTROM)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
