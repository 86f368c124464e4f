import pytest

acceptance_lines: list[str] = []


@pytest.fixture
def record_criterion():
    """Collect one PASS/FAIL line per acceptance criterion; printed in
    the terminal summary after the run."""

    def _record(number: int, name: str, failures: list[str]) -> None:
        verdict = "PASS" if not failures else "FAIL"
        acceptance_lines.append(f"criterion {number} ({name}): {verdict}")
        assert not failures, f"criterion {number} ({name}): " + "; ".join(failures)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(acceptance_lines):
            terminalreporter.write_line(line)
