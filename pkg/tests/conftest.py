import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, note in RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)
