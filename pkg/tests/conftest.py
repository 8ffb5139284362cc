import sys
from pathlib import Path

import pytest

# lets test modules import the shared oracles and generators
sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed or report.skipped
    if report.when == "call" or failed:
        previous = _criteria.get(number, (title, "PASS"))[1]
        status = "FAIL" if failed or previous == "FAIL" else "PASS"
        _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"{status} criterion {number:>2}: {title}")
