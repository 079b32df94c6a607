import importlib.util
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
GOLDENS = Path(__file__).resolve().parent / "goldens"


def _load_oracle():
    spec = importlib.util.spec_from_file_location("enumerate_splits", ROOT / "scripts" / "enumerate_splits.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


@pytest.fixture(scope="session")
def oracle():
    """The brute-force split enumeration script, loaded without the package."""
    return _load_oracle()


@pytest.fixture(scope="session")
def goldens_dir():
    return GOLDENS


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion covered by the test")
    config._criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is not None:
        report.config._criteria.append((crit, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args
        rep.config = item.config


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = getattr(config, "_criteria", [])
    if not rows:
        return
    merged = {}
    for crit, outcome in rows:
        merged[crit] = merged.get(crit, True) and outcome == "passed"
    terminalreporter.section("acceptance criteria")
    for (n, text), ok in sorted(merged.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {text}")
