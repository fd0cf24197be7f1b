import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m:
                verdict = "PASS" if outcome == "passed" else "FAIL"
                label = m.group(2).replace("_", " ")
                lines.append((int(m.group(1)), verdict, label))
    if lines:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for num, verdict, label in sorted(lines):
            terminalreporter.write_line(
                f"[criterion {num}] {verdict}: {label}")
