"""Mixed graphs: an underlying simple graph with one state per edge."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .errors import MixedGraphFormatError
from .graphs import Edge, Graph, complete_graph, hypercube


class EdgeState(enum.Enum):
    """State of edge ``(u, v)`` with ``u < v``: FORWARD is ``u -> v``, BACKWARD is ``v -> u``."""

    UNDIRECTED = "undirected"
    FORWARD = "forward"
    BACKWARD = "backward"

    @property
    def is_arc(self) -> bool:
        return self is not EdgeState.UNDIRECTED

    def reversed(self) -> EdgeState:
        if self is EdgeState.FORWARD:
            return EdgeState.BACKWARD
        if self is EdgeState.BACKWARD:
            return EdgeState.FORWARD
        return self


_FLIP = {s: s.reversed() for s in EdgeState}


@dataclass(frozen=True)
class MixedGraph:
    underlying: Graph
    states: tuple[EdgeState, ...]

    def __post_init__(self) -> None:
        if len(self.states) != self.underlying.m:
            raise ValueError(
                f"{len(self.states)} edge states given for {self.underlying.m} edges"
            )
        object.__setattr__(self, "states", tuple(EdgeState(s) for s in self.states))

    @classmethod
    def from_state_map(cls, g: Graph, states: Mapping[Edge, EdgeState]) -> MixedGraph:
        norm = {}
        for (u, v), s in states.items():
            if u > v:
                u, v, s = v, u, EdgeState(s).reversed()
            norm[(u, v)] = EdgeState(s)
        if set(norm) != set(g.edges):
            raise ValueError("state map keys must equal the underlying edge set")
        return cls(g, tuple(norm[e] for e in g.edges))

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[Edge]) -> MixedGraph:
        """Arcs given as ``(tail, head)``; every other edge is undirected."""
        states = {e: EdgeState.UNDIRECTED for e in g.edges}
        for t, h in arcs:
            e = (min(t, h), max(t, h))
            if e not in states:
                raise ValueError(f"arc {t}->{h} is not an edge of the underlying graph")
            if states[e] is not EdgeState.UNDIRECTED:
                raise ValueError(f"edge {e} oriented twice")
            states[e] = EdgeState.FORWARD if t < h else EdgeState.BACKWARD
        return cls(g, tuple(states[e] for e in g.edges))

    @property
    def n(self) -> int:
        return self.underlying.n

    @cached_property
    def state_map(self) -> dict[Edge, EdgeState]:
        return dict(zip(self.underlying.edges, self.states))

    def state(self, u: int, v: int) -> EdgeState:
        """State of the edge seen from ``u``: FORWARD means ``u -> v``."""
        if u < v:
            return self.state_map[(u, v)]
        return self.state_map[(v, u)].reversed()

    @property
    def arc_count(self) -> int:
        return sum(s.is_arc for s in self.states)

    @property
    def undirected_count(self) -> int:
        return len(self.states) - self.arc_count

    @property
    def signature(self) -> tuple[int, int]:
        """``(a, b)``: arc count and undirected-edge count."""
        return self.arc_count, self.undirected_count

    def is_oriented(self) -> bool:
        return all(s.is_arc for s in self.states)

    def arcs(self) -> list[Edge]:
        out = []
        for (u, v), s in zip(self.underlying.edges, self.states):
            if s is EdgeState.FORWARD:
                out.append((u, v))
            elif s is EdgeState.BACKWARD:
                out.append((v, u))
        return out

    def undirected_edges(self) -> list[Edge]:
        return [e for e, s in zip(self.underlying.edges, self.states) if not s.is_arc]

    def relabel(self, perm: tuple[int, ...]) -> MixedGraph:
        """Image under the vertex map ``v -> perm[v]``."""
        g = self.underlying.relabel(perm)
        states = {}
        for (u, v), s in zip(self.underlying.edges, self.states):
            pu, pv = perm[u], perm[v]
            states[(pu, pv) if pu < pv else (pv, pu)] = s if pu < pv else _FLIP[s]
        return MixedGraph(g, tuple(states[e] for e in g.edges))

    def __str__(self) -> str:
        a, b = self.signature
        return f"MixedGraph(n={self.n}, a={a}, b={b})"


def orient_all(g: Graph, rule: Callable[[int, int], bool] | None = None) -> MixedGraph:
    """Orient every edge; ``rule(u, v)`` (with ``u < v``) says whether the arc is ``u -> v``.

    The default rule points every arc from the lower label to the higher one.
    """
    if rule is None:
        return MixedGraph(g, (EdgeState.FORWARD,) * g.m)
    return MixedGraph(
        g, tuple(EdgeState.FORWARD if rule(u, v) else EdgeState.BACKWARD for u, v in g.edges)
    )


def undirect_all(g: Graph) -> MixedGraph:
    return MixedGraph(g, (EdgeState.UNDIRECTED,) * g.m)


def reverse_all_arcs(m: MixedGraph) -> MixedGraph:
    return MixedGraph(m.underlying, tuple(_FLIP[s] for s in m.states))


def reverse_arcs_at(m: MixedGraph, v: int) -> MixedGraph:
    if not 0 <= v < m.n:
        raise ValueError(f"vertex {v} out of range [0, {m.n})")
    return MixedGraph(
        m.underlying,
        tuple(_FLIP[s] if v in e else s for e, s in zip(m.underlying.edges, m.states)),
    )


# --- fixtures -------------------------------------------------------------
# Transcribed 1-indexed from the case analysis of the cubic classification and
# shifted down by one. On Q3 the vertex v_t is label t-1, which matches the
# XOR labeling of hypercube(3): its six 4-cycles {v1,v2,v4,v3}, {v2,v4,v8,v6},
# {v5,v6,v8,v7}, {v1,v3,v7,v5}, {v1,v2,v6,v5}, {v3,v4,v8,v7} are faces of the cube.

_FIXTURE_ARCS: dict[str, tuple[str, tuple[Edge, ...]]] = {
    # K4: u1 joined to u2, u3, u4 by undirected edges
    "G1": ("K4", ((2, 3), (4, 2), (3, 4))),
    # Q3, a=9, b=3: undirected v1v2, v1v3, v1v5
    "H1": ("Q3", ((3, 4), (4, 2), (2, 6), (6, 5), (5, 7), (7, 3), (4, 8), (6, 8), (7, 8))),
    # Q3, a=8, b=4: undirected v1v2, v1v3, v5v6, v5v7
    "H3": ("Q3", ((3, 4), (4, 2), (7, 8), (8, 6), (4, 8), (6, 2), (1, 5), (7, 3))),
    # Q3, a=7, b=5: undirected v1v2, v1v3, v3v7, v5v6, v7v8
    "H4": ("Q3", ((3, 4), (4, 2), (4, 8), (7, 5), (5, 1), (2, 6), (6, 8))),
    # Q3, a=6, b=6: undirected v1v2, v1v3, v3v7, v4v8, v5v6, v6v8
    "H5": ("Q3", ((3, 4), (4, 2), (2, 6), (5, 1), (7, 5), (8, 7))),
    # Q3, a=6, b=6: undirected v1v2, v1v3, v1v5, v4v8, v6v8, v7v8
    "H6": ("Q3", ((3, 4), (4, 2), (2, 6), (6, 5), (5, 7), (7, 3))),
}

FIXTURE_NAMES = tuple(_FIXTURE_ARCS)


def fixture(name: str) -> MixedGraph:
    try:
        base, arcs = _FIXTURE_ARCS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    g = complete_graph(4) if base == "K4" else hypercube(3)
    return MixedGraph.from_arcs(g, [(t - 1, h - 1) for t, h in arcs])


# --- JSON -----------------------------------------------------------------


def to_json_obj(m: MixedGraph) -> dict:
    return {
        "n": m.n,
        "edges": [
            {"u": u, "v": v, "state": s.value} for (u, v), s in zip(m.underlying.edges, m.states)
        ],
    }


def emit_mixed_json(m: MixedGraph, indent: int | None = None) -> str:
    """Canonical encoding: edges sorted by ``(u, v)``, compact unless ``indent`` is given."""
    if indent is None:
        return json.dumps(to_json_obj(m), separators=(",", ":"))
    return json.dumps(to_json_obj(m), indent=indent)


def from_json_obj(obj) -> MixedGraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise MixedGraphFormatError('mixed graph JSON must be an object with "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise MixedGraphFormatError(f'"n" must be a non-negative integer, got {n!r}')
    if not isinstance(obj["edges"], list):
        raise MixedGraphFormatError('"edges" must be an array')
    states: dict[Edge, EdgeState] = {}
    for item in obj["edges"]:
        try:
            u, v, raw = item["u"], item["v"], item["state"]
        except (KeyError, TypeError):
            raise MixedGraphFormatError(f"edge entry needs u, v, state: {item!r}") from None
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
            raise MixedGraphFormatError(f"edge endpoints must be integers: {item!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise MixedGraphFormatError(f"endpoint out of range in {item!r} (n = {n})")
        if not u < v:
            raise MixedGraphFormatError(f"edge must satisfy u < v: {item!r}")
        try:
            state = EdgeState(raw)
        except ValueError:
            raise MixedGraphFormatError(f"unknown state {raw!r}") from None
        if (u, v) in states:
            raise MixedGraphFormatError(f"duplicate edge ({u}, {v})")
        states[(u, v)] = state
    g = Graph(n, tuple(states))
    return MixedGraph(g, tuple(states[e] for e in g.edges))


def parse_mixed_json(text: str | bytes) -> MixedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MixedGraphFormatError(f"invalid JSON: {exc}") from None
    return from_json_obj(obj)
