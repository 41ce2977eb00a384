import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-3, max_value=3).map(Fraction)


@st.composite
def matrices(draw, rows=None, cols=None, elements=small_ints, max_side=5):
    from derivscope.linalg import Matrix
    r = draw(st.integers(1, max_side)) if rows is None else rows
    c = draw(st.integers(1, max_side)) if cols is None else cols
    data = draw(st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(data, cols=c)


@st.composite
def laws(draw, dims=(2, 3, 4), elements=st.integers(-2, 2).map(Fraction)):
    from derivscope.algebra import Algebra
    from itertools import combinations
    n = draw(st.sampled_from(dims))
    consts = {p: draw(st.lists(elements, min_size=n, max_size=n))
              for p in combinations(range(n), 2)}
    return Algebra(n, consts)


# acceptance bookkeeping: one line per criterion in the terminal summary
_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    num, text = marker
    ok = report.passed
    prev = _criteria.get(num)
    _criteria[num] = (text, ok if prev is None else prev[1] and ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, ok = _criteria[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {text}")
