import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        key = f"criterion {m.group(1)} ({m.group(2).replace('_', ' ')})"
        _ACCEPTANCE[key] = (report.outcome.upper(), report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split()[1])):
        outcome, dur = _ACCEPTANCE[key]
        word = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{word}  {key}  [{dur:.1f}s]")
