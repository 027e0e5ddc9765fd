import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line for the terminal summary, then assert."""
    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else "")
        request.config._acceptance_lines.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
