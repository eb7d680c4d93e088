"""Shared pytest plumbing: the acceptance report lines.

test_acceptance.py records one PASS/FAIL line per criterion; printing them
from the terminal-summary hook keeps them visible even under output capture.
"""

acceptance_lines: list[str] = []


def record(line: str) -> None:
    acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
