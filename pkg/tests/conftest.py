import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance summary")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
