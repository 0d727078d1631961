"""Shared pytest plumbing: the acceptance tests record one outcome per
criterion here, and the terminal summary prints them as a block."""

ACCEPTANCE_RESULTS = []


def record_criterion(number: int, label: str, passed: bool) -> None:
    ACCEPTANCE_RESULTS.append((number, label, passed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, passed in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {label}")
