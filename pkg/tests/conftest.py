import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import CIRCLE_PARABOLA, CUSP, LINK_EXACT_POLYS, LINK_POLYS, LINK_VARS  # noqa: E402

from numcert import Mode, PolySystem  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def link():
    return PolySystem.from_strings(LINK_POLYS, LINK_VARS)


@pytest.fixture(scope="session")
def link_exact():
    return PolySystem.from_strings(LINK_EXACT_POLYS, LINK_VARS, Mode.EXACT)


@pytest.fixture(scope="session")
def circle_parabola():
    return PolySystem.from_strings(CIRCLE_PARABOLA, ["x", "y"])


@pytest.fixture(scope="session")
def cusp():
    return PolySystem.from_strings(CUSP, ["x", "y"])


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.summary_lines():
            terminalreporter.write_line(line)
