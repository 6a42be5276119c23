"""Collects one verdict line per acceptance criterion and prints them at the end."""

import pytest

CRITERIA = {}


@pytest.fixture
def criterion():
    def record(number, passed, detail=""):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        CRITERIA[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[number])
