import os

import pytest
from hypothesis import HealthCheck, settings

from gbdq.census import CensusConfig, global_graph, run_census

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

JOBS = max(1, int(os.environ.get("GBDQ_JOBS", "1")))
_graphs: dict = {}
_censuses: dict = {}


def level_graph(n):
    if n not in _graphs:
        _graphs[n] = global_graph(n, jobs=JOBS)
    return _graphs[n]


def level_census(n):
    if n not in _censuses:
        _censuses[n] = run_census(CensusConfig(n, JOBS), level_graph(n))
    return _censuses[n]


@pytest.fixture(scope="session")
def graphs():
    return level_graph


@pytest.fixture(scope="session")
def censuses():
    return level_census


_criteria: dict = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_") or report.when != "call" and not report.failed:
        return
    k = int(name.split("_")[2])
    ok = report.passed and not hasattr(report, "wasxfail")
    if report.when == "call" or report.failed:
        _criteria.setdefault(k, []).append((name, ok))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        bad = [n for n, ok in _criteria[k] if not ok]
        line = f"criterion {k}: {'PASS' if not bad else 'FAIL'}"
        if bad:
            line += "  (" + ", ".join(sorted(set(bad))) + ")"
        terminalreporter.write_line(line)
