from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from symquartic.poly import Polynomial

_acceptance: list[tuple[str, str, str]] = []


def small_rationals(bound: int = 3):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, 3),
    )


@st.composite
def polynomials(draw, n: int, max_terms: int = 4, max_exp: int = 2):
    terms = draw(
        st.lists(
            st.tuples(
                st.tuples(*[st.integers(0, max_exp)] * n),
                small_rationals(),
            ),
            max_size=max_terms,
        )
    )
    return Polynomial(n, terms)


@st.composite
def points(draw, n: int):
    return draw(st.lists(small_rationals(), min_size=n, max_size=n))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _acceptance.append((item.name, doc, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, doc, status in _acceptance:
        terminalreporter.write_line(f"[{status}] {doc}")
