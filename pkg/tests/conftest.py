import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion lines recorded by the acceptance suite, echoed in the summary
ACCEPTANCE_LINES: list[str] = []


def extended_enabled(config=None) -> bool:
    if os.environ.get("TWOLEVEL_EXTENDED", "") not in ("", "0"):
        return True
    return bool(config is not None and config.getoption("--extended", default=False))


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False, help="run long computations")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
