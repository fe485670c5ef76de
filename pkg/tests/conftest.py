import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from geoplan.enumerate import SearchConfig, census  # noqa: E402


@functools.lru_cache(maxsize=None)
def cached_census(ell: int, mode: str = "strict", window: str = "complete"):
    return census(SearchConfig(ell=ell, mode=mode, window=window))


@pytest.fixture(scope="session")
def census_of():
    return cached_census


# -- one summary line per acceptance criterion --------------------------------

_CRITERIA: dict[int, list] = {}


def _criterion_of(nodeid: str):
    if "test_acceptance.py::test_criterion_" not in nodeid:
        return None
    name = nodeid.split("::test_criterion_", 1)[1]
    return int(name.split("_", 1)[0])


def pytest_runtest_logreport(report):
    num = _criterion_of(report.nodeid)
    if num is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        details = [v for k, v in report.user_properties if k == "detail"]
        if report.skipped and isinstance(report.longrepr, tuple):
            details.append("skipped: " + report.longrepr[2].removeprefix("Skipped: "))
        _CRITERIA.setdefault(num, []).append((report.outcome, details))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        parts = _CRITERIA[num]
        outcomes = {o for o, _ in parts}
        if "failed" in outcomes:
            status = "FAIL"
        elif outcomes == {"skipped"}:
            status = "NOT RUN"
        elif "skipped" in outcomes:
            status = "PASS (part not run)"
        else:
            status = "PASS"
        notes = "; ".join(d for _, ds in parts for d in ds)
        terminalreporter.write_line(f"criterion {num:2d}: {status}" + (f"  ({notes})" if notes else ""))
