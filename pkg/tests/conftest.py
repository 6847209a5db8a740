import os
import sys
from pathlib import Path

import hypothesis
import pytest

from hopfinv.action import diagonal, make_spec
from hopfinv.exactfield import FieldSpec

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=1000, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SPECS = Path(__file__).resolve().parent.parent / "specs"

QQ = FieldSpec.rational()
GF7 = FieldSpec.prime(7)


@pytest.fixture
def specs_dir():
    return SPECS


@pytest.fixture
def sweedler():
    return make_spec(QQ, 2, {"g": diagonal([1, -1])}, {"d": ("1", "g", [[0, 1], [0, 0]])}, {("g", "g"): "1"})


@pytest.fixture
def diag_nonscalar():
    return make_spec(QQ, 2, {"g": diagonal([1, -1])}, group_table={("g", "g"): "1"})


@pytest.fixture
def scalar_minus1():
    return make_spec(QQ, 2, {"g": diagonal([-1, -1])}, group_table={("g", "g"): "1"})


@pytest.fixture
def trivial():
    return make_spec(QQ, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
