import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ufc.fa import Dfa

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def dfas(draw, max_states=6, max_letters=3, letters="abc", partial=False):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    alphabet = letters[:k]
    low = -1 if partial else 0
    rows = [draw(st.lists(st.integers(low, n - 1), min_size=n, max_size=n)) for _ in alphabet]
    finals = draw(st.sets(st.integers(0, n - 1)))
    initial = draw(st.integers(0, n - 1))
    return Dfa(n, alphabet, rows, initial, finals)


def pytest_addoption(parser):
    parser.addoption("--semigroup-n7", action="store_true", default=False,
                     help="also check the n = 7 semigroup size (823543 elements)")


# one summary line per acceptance criterion

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")


@pytest.fixture
def tmp_automaton(tmp_path):
    from ufc import io

    def write(d, name="a.json"):
        path = tmp_path / name
        io.save(d, path)
        return str(path)
    return write
