import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: list[tuple[str, bool, str]] = []


def record_criterion(name, passed, detail=""):
    _criteria.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
