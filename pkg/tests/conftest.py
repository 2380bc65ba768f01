import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tss.cycles import KERNELS  # noqa: E402


@pytest.fixture(params=sorted(KERNELS))
def backend(request):
    """Every available cycle-counting kernel."""
    return request.param


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and (report.when == "call" or report.failed):
        results = item.config._acceptance
        key = tuple(marker.args)
        results[key] = results.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter, config):
    results = config._acceptance
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(results.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
