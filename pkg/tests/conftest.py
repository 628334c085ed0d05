import helpers


def pytest_terminal_summary(terminalreporter):
    if not helpers.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(helpers.RESULTS):
        mark = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{mark}] {number:2d}. {title} ({detail})")
