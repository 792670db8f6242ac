import pytest

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    """Collect criterion PASS/FAIL lines for the terminal summary."""
    _acceptance_lines.append(line)


@pytest.hookimpl
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
