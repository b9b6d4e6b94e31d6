import os

import pytest

ACCEPTANCE_LINES: list[str] = []

EXTENDED = os.environ.get("UNUSUAL_EXTENDED", "") not in ("", "0")


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: long optional runs (set UNUSUAL_EXTENDED=1)")


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="set UNUSUAL_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
