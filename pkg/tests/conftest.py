import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, elapsed in sorted(acceptance_log.RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  [{num:>2}] {title}  ({elapsed:.2f} s)")
