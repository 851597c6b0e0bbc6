import sys
from pathlib import Path

import pytest

from keynesgrowth import ModelParams

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"
TEMPLATE = Path(__file__).parents[1] / "data" / "us_template_1947_2014.csv"


def make_params(alpha=0.3, sigma=0.18, delta=0.06, n=0.01):
    """Params with the requested composite rate, all of it in the saving rate."""
    return ModelParams(
        saving_rate=sigma,
        tax_rate=0.0,
        gov_rate=0.0,
        netexport_rate=0.0,
        depreciation=delta,
        laborforce_growth=n,
        curvature=alpha,
    )


@pytest.fixture
def params():
    return make_params()


@pytest.fixture
def toy_csv():
    return DATA / "toy_macro.csv"


@pytest.fixture
def template_csv():
    return TEMPLATE


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
