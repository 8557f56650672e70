import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, when that module ran."""
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.CRITERIA):
        outcome = module.RESULTS.get(number)
        if outcome is None:
            status, detail = "FAIL", "did not run"
        else:
            status, detail = ("PASS" if outcome[0] else "FAIL"), outcome[1]
        line = f"[{status}] criterion {number}: {module.CRITERIA[number]}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
