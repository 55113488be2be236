import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = {
    1: "interval oracle (l=2)",
    2: "disc oracle (l=2)",
    3: "unit square sweep, oracle and Euclidean inequality",
    4: "higher order (l=3) moments and Euclidean inequality",
    5: "spherical cap inequality and closed-form bound",
    6: "exact recursion algebra",
    7: "property suites",
    8: "l=2 reduction chain",
}

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        n = marker.args[0]
        ok = report.passed
        _outcomes[n] = _outcomes.get(n, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _outcomes:
            continue
        status = "PASS" if _outcomes[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {CRITERIA[n]}")
