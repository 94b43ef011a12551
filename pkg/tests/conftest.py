import acceptance_log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, verdict, description in acceptance_log.RESULTS:
        terminalreporter.write_line(f"ACCEPTANCE {criterion}: {verdict} - {description}")
