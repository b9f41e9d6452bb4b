import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def report_criterion():
    def report(number, ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}")
        print(ACCEPTANCE_LINES[-1])

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
