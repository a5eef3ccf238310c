import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dgakit.cdga import catalog  # noqa: E402

CATALOG = ["g6_15_m1", "abelian3", "abelian4", "heisenberg3", "s2_model", "circle", "point"]
# working max degree for algebras with even generators
CAPS = {"s2_model": 7}


@pytest.fixture(scope="session")
def g6():
    return catalog("g6_15_m1")


def word(cdga, w, coeff=1):
    """Monomial from a string of generator indices: word(g6, "256") = x2*x5*x6."""
    alg = cdga.algebra
    el = alg.scalar(coeff)
    for ch in w:
        el = el * alg.gen(f"x{ch}")
    return el


def poly(cdga, terms):
    out = cdga.algebra.zero()
    for w, c in terms.items():
        out = out + word(cdga, w, c)
    return out


@pytest.fixture(scope="session")
def omega_tilde(g6):
    return poly(g6, {"16": 2, "25": 1, "34": -1})


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items(), key=lambda kv: _order(kv[0])):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")


def _order(name):
    parts = name.split("_")
    try:
        return (int(parts[2].rstrip("abcdefgh")), name)
    except (IndexError, ValueError):
        return (99, name)
