from pathlib import Path

import pytest

from lbound.io import load_zeros
from lbound.lfunc import dirichlet_descriptor, zeta_descriptor

DATA = Path(__file__).parent / "data"
ZEROS_FILE = DATA / "zeta_zeros_1e4.txt"

# acceptance verdicts, filled in by test_acceptance and echoed at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def zeta():
    return zeta_descriptor()


@pytest.fixture(scope="session")
def chi5():
    return dirichlet_descriptor(5, 2)


@pytest.fixture(scope="session")
def zeros():
    return load_zeros(ZEROS_FILE)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
