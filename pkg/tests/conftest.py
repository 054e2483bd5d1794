"""Prints one PASS/FAIL summary line per acceptance criterion.

Acceptance tests live in test_acceptance.py and are named test_c<N>_*; every
test contributing to criterion N is folded into a single line, printed in
the terminal summary after the run.
"""

import re
from collections import defaultdict

_CRITERIA = {
    1: "family polynomials match the reference corpus",
    2: "partials and derivative sums match the reference corpus",
    3: "verify --max-y 25 reports PASS for every y",
    4: "closed-form derivative values at 18 rational points",
    5: "oracle m --max-n 30 passes for m = 0..8",
    6: "leading-coefficient closed form and zero residual, m = 0..20",
    7: "randomized property suites, 1000 cases each",
    8: "exact finite-difference bound, y = 0..5 at 20 points each",
}

_outcomes: dict[int, list[str]] = defaultdict(list)

_ACCEPTANCE_RE = re.compile(r"test_acceptance\.py::test_c(\d+)")


def pytest_runtest_logreport(report):
    match = _ACCEPTANCE_RE.search(report.nodeid)
    if match is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[int(match.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        outcomes = _outcomes[number]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        label = _CRITERIA.get(number, "")
        terminalreporter.write_line(f"criterion {number}: {status}  ({label})")
