import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from jetmult.polycore import JetVar, Monomial, Polynomial  # noqa: E402

POOL = [JetVar(1, 0), JetVar(1, 1), JetVar(2, 0), JetVar(2, 1), JetVar(3, 0), JetVar(3, 2)]

rationals = st.builds(
    Fraction,
    st.integers(-100, 100),
    st.integers(1, 100),
)


@st.composite
def monomials(draw, pool=POOL, max_degree=4):
    degree = draw(st.integers(0, max_degree))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=degree, max_size=degree))
    return Monomial((v, 1) for v in chosen)


@st.composite
def polynomials(draw, pool=POOL, max_degree=4, max_terms=5):
    pairs = draw(st.lists(st.tuples(monomials(pool, max_degree), rationals), max_size=max_terms))
    return Polynomial(pairs)


# -- acceptance reporting ---------------------------------------------------------

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "passed": 0, "failed": 0})
    if report.when == "call" and report.passed:
        entry["passed"] += 1
    elif report.failed:
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        verdict = "PASS" if e["failed"] == 0 and e["passed"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {verdict}  {e['title']}  ({e['passed']} passed, {e['failed']} failed)"
        )
