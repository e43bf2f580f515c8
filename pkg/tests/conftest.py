import numpy as np
import pytest

_CRITERIA = []


@pytest.fixture
def report():
    """Record one acceptance line; printed in the terminal summary."""

    def record(number, ok, detail=""):
        _CRITERIA.append((number, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def k3():
    return ~np.eye(3, dtype=bool)


@pytest.fixture
def path5():
    adj = np.zeros((5, 5), dtype=bool)
    for t in range(4):
        adj[t, t + 1] = adj[t + 1, t] = True
    return adj
