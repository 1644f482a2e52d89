import sys
from pathlib import Path

# Oracles live next to the tests, outside the installed package.
sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    lines = {}
    for status in ("passed", "failed", "error", "xfailed", "xpassed"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if getattr(report, "when", "call") != "call":
                continue
            name = nodeid.split("::")[-1]
            label = {
                "passed": "PASS",
                "failed": "FAIL",
                "error": "ERROR",
                "xfailed": "EXPECTED FAIL (see notes in test)",
                "xpassed": "UNEXPECTED PASS",
            }[status]
            lines[name] = label
    if lines:
        terminalreporter.section("acceptance criteria")
        for name in sorted(lines):
            terminalreporter.write_line(f"{name}: {lines[name]}")
