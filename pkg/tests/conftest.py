from __future__ import annotations

import pytest

from domcrit import search
from domcrit.harness import exhaustive_corpus, run_suites

FULL_SUITES = ["2critical", "matching:6:even", "matching:7:odd", "matching:5:even",
               "matching:5:odd", "cut-lemma", "3conn", "facts", "degree1"]

_ACCEPTANCE: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for name, args in getattr(report, "criterion", ()):
        _ACCEPTANCE.append((args[0], args[1], "PASS" if report.passed else "FAIL"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = [("criterion", m.args) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {text}")


@pytest.fixture(scope="session")
def exhaustive9():
    """All suites over every graph of order at most 9, computed once."""
    import time
    t0 = time.perf_counter()
    reports = run_suites(exhaustive_corpus(9), FULL_SUITES)
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="session")
def case_results():
    import time
    out = {}
    for name, fn in search.SEARCHES.items():
        t0 = time.perf_counter()
        out[name] = (fn(), time.perf_counter() - t0)
    return out
