import re

ACCEPTANCE = "test_acceptance.py"
_results = {}


def pytest_runtest_logreport(report):
    if ACCEPTANCE not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)_", report.nodeid)
    if not m:
        return
    key = int(m.group(1))
    name = report.nodeid.split("::")[-1].split("[")[0]
    failed = report.failed
    prev = _results.get(key)
    if report.when == "call" or failed:
        _results[key] = (name, "FAIL" if failed or (prev and prev[1] == "FAIL") else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        name, status = _results[key]
        terminalreporter.write_line(f"criterion {key:2d}: {status}  {name}")
