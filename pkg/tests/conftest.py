"""Shared fixtures and small builders for the test suite."""
import pytest

from nbett.generate import default_pool
from nbett.renaming import Var, VSu, VZe, embed_var
from nbett.syntax import El, Pi, U

V0 = embed_var(VZe)
V1 = embed_var(VSu(VZe))
V2 = embed_var(Var(2))
PI_U_U = Pi(U(), U())
PI_U_EL = Pi(U(), El(V0))


@pytest.fixture(scope="session")
def pool():
    return default_pool()


# One line per acceptance criterion, collected by tests/test_acceptance.py and
# repeated at the end of the run so that the summary survives output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
