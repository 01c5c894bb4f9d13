import pytest

from ablgirth.generators import complete, petersen, random_regular
from ablgirth.graph import Multigraph


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture(scope="session")
def walk_graphs():
    """Small graphs with branching, loops and parallel edges for random walks."""
    return [
        complete(4),
        petersen(),
        random_regular(12, 3, 5),
        Multigraph(3, [(0, 1), (0, 1), (1, 2), (2, 0), (2, 2), (0, 0)]),
    ]


_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def report():
    """``report(n, ok, detail)`` records one acceptance line and prints it."""

    def record(number: int, ok: bool, detail: str) -> bool:
        _ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
