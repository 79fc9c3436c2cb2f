from __future__ import annotations

import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    number = request.node.get_closest_marker("criterion").args[0]

    def report(passed: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        _LINES[number] = line
        print(line)

    return report


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is not None and call.when == "call" and call.excinfo is not None:
        _LINES.setdefault(marker.args[0], f"criterion {marker.args[0]}: FAIL  {call.excinfo.typename}")


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_LINES):
            terminalreporter.write_line(_LINES[n])
