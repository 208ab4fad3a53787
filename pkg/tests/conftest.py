import json
from pathlib import Path

import pytest

from gammazero.skein import load_pd

DATA = Path(__file__).resolve().parents[1] / "src" / "gammazero" / "data"


def knot_table() -> dict:
    return json.loads((DATA / "knot_table.json").read_text())["knots"]


def fixture_knots(max_crossings: int = 11):
    for name, info in sorted(knot_table().items()):
        if info["crossing_number"] <= max_crossings:
            yield name, load_pd(DATA / info["file"]), info


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def conway():
    return load_pd(DATA / "pd" / "conway.pd")


@pytest.fixture(scope="session")
def kt():
    return load_pd(DATA / "pd" / "kinoshita_terasaka.pd")


@pytest.fixture(scope="session")
def trefoil():
    return load_pd(DATA / "pd" / "K3_1.pd")


@pytest.fixture(scope="session")
def figure_eight():
    return load_pd(DATA / "pd" / "K4_1.pd")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = mod.summary_lines() if mod else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
