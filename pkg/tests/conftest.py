import os
import re
import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[str, str, bool, float, float]] = []


def pytest_addoption(parser):
    parser.addoption("--stretch", action="store_true", default=False,
                     help="also run the order 7-8 enumeration suite")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--stretch") or os.environ.get("VRC_STRETCH") == "1":
        return
    skip = pytest.mark.skip(reason="stretch suite: pass --stretch or set VRC_STRETCH=1")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """Time a block, record a PASS/FAIL line, and fail when over the limit."""

    @contextmanager
    def run(cid: str, title: str, limit: float):
        start = time.monotonic()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.monotonic() - start
            within = elapsed < limit
            _RESULTS.append((cid, title, ok and within, elapsed, limit))
        assert within, f"criterion {cid} took {elapsed:.1f}s, limit {limit:.0f}s"

    return run


def _order(result):
    return int(re.match(r"\d+", result[0]).group()), result[0]


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, ok, elapsed, limit in sorted(_RESULTS, key=_order):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} [{cid}] {title} ({elapsed:.2f}s / limit {limit:.0f}s)")
