from __future__ import annotations

import time
from pathlib import Path

import pytest

from dsomatrix import audit
from dsomatrix._pool import default_jobs
from dsomatrix.graphs import enumerate_up_to

TESTS = Path(__file__).resolve().parent
GOLDEN = TESTS / "golden"
DATA = TESTS / "data"

# criterion lines recorded by test_acceptance, echoed after the run
ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture(scope="session")
def exhaustive_audit():
    """Full registry over every labeled graph with 1 <= n <= 6, plus wall time."""
    start = time.perf_counter()
    report = audit.run_corpus_audit(enumerate_up_to(6), jobs=default_jobs())
    return report, time.perf_counter() - start


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: (len(k), k)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
