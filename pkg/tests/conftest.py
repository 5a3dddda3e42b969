"""Shared pytest plumbing: collects acceptance-criterion outcomes and prints
one PASS/FAIL line per criterion in the terminal summary."""

from __future__ import annotations

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def record_acceptance(number: int, name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[number] = (name, passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        name, passed, detail = ACCEPTANCE_RESULTS[number]
        line = f"ACCEPTANCE {number} ({name}): {'PASS' if passed else 'FAIL'}"
        if detail and not passed:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
