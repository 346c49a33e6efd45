import functools
import re
from collections import OrderedDict

import pytest

from g1surf.builder import builtin_surface


@functools.lru_cache(maxsize=None)
def _cached(name):
    return builtin_surface(name)


@pytest.fixture(scope="session")
def surface():
    return _cached


# one PASS/FAIL line per acceptance criterion, aggregated over its tests
_CRITERION = re.compile(r"test_criterion_(\d+)")
_results: "OrderedDict[int, bool]" = OrderedDict()


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.failed:
        _results[n] = _results.get(n, True) and not report.failed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _results[n] else 'FAIL'}")
