from __future__ import annotations

import time

import pytest

_RESULTS = pytest.StashKey[list]()
_PASSED = pytest.StashKey[bool]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.stash[_PASSED] = report.passed


@pytest.fixture
def criterion(request):
    """Call with (number, title) before checking; the outcome is listed in the summary."""
    record = {}

    def start(number: int, title: str) -> None:
        record.update(number=number, title=title, t0=time.perf_counter())

    yield start
    if record:
        seconds = time.perf_counter() - record["t0"]
        passed = request.node.stash.get(_PASSED, False)
        request.config.stash[_RESULTS].append((record["number"], record["title"], passed, seconds))


def pytest_terminal_summary(terminalreporter, config):
    results = sorted(config.stash.get(_RESULTS, []))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds in results:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title} ({seconds:.2f} s)")
