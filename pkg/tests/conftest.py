"""Session-wide parity log.

Every Ap3Report created anywhere in the run is recorded together with its
parity status (total - n even, all weights odd).  The session fails if any
report violated parity, and the terminal summary states how many were seen.
"""
import pytest

from ap3lab.counting import Ap3Report

PARITY_LOG = {"reports": 0, "violations": []}
ACCEPTANCE_LINES = []

_original_post_init = Ap3Report.__post_init__


def _recording_post_init(self):
    PARITY_LOG["reports"] += 1
    if (self.total - len(self.weights)) % 2 or any(w % 2 == 0 for w in self.weights):
        PARITY_LOG["violations"].append((self.total, self.weights))
    _original_post_init(self)


Ap3Report.__post_init__ = _recording_post_init


def pytest_sessionfinish(session, exitstatus):
    if PARITY_LOG["violations"] and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    v = PARITY_LOG["violations"]
    status = "PASS" if not v else "FAIL"
    terminalreporter.write_line(
        f"[{status}] parity log: {PARITY_LOG['reports']} reports checked, {len(v)} violations")


@pytest.fixture
def parity_log():
    return PARITY_LOG


@pytest.fixture
def verdict():
    """Record one acceptance line, print it, and fail the test if ``ok`` is false."""
    def record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record
