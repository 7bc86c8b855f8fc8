from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mixedenergy.graphs import Graph  # noqa: E402
from mixedenergy.mixed import EdgeState, MixedGraph  # noqa: E402

_CODE = {EdgeState.UNDIRECTED: 0, EdgeState.FORWARD: 1, EdgeState.BACKWARD: 2}
_STATE = {v: k for k, v in _CODE.items()}

_CRITERIA: list[str] = []


def to_assignment(m: MixedGraph) -> dict:
    return {e: _CODE[s] for e, s in zip(m.underlying.edges, m.states)}


def from_assignment(n: int, assignment: dict) -> MixedGraph:
    g = Graph(n, tuple(assignment))
    return MixedGraph(g, tuple(_STATE[assignment[e]] for e in g.edges))


@pytest.fixture
def criterion():
    """Record one acceptance line, then fail the test if the criterion did not hold."""

    def record(number: int, title: str, ok: bool, detail: str) -> None:
        _CRITERIA.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
        print(_CRITERIA[-1])
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
