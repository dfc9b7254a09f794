"""Shared pytest hooks.

After a run that included the acceptance gate, repeat its verdicts as
one [PASS]/[FAIL] line per criterion so they survive output capture.
"""
import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, text = results[num]
        terminalreporter.write_line(
            "[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", num, text)
        )
