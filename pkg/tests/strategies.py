"""Hypothesis strategies for graphs, mixed graphs and switchings."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from mixedenergy.graphs import Graph, complete_graph, cycle_graph, hypercube, prism_graph
from mixedenergy.mixed import EdgeState, MixedGraph
from mixedenergy.switching import SwitchingFunction

STATES = (EdgeState.UNDIRECTED, EdgeState.FORWARD, EdgeState.BACKWARD)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, k in zip(pairs, keep) if k))


def named_regular():
    return st.sampled_from([complete_graph(4), hypercube(2), hypercube(3), cycle_graph(5), prism_graph()])


@st.composite
def mixed_graphs(draw, base=None, oriented: bool = False) -> MixedGraph:
    g = draw(base if base is not None else graphs(max_n=8))
    pool = STATES[1:] if oriented else STATES
    states = draw(st.lists(st.sampled_from(pool), min_size=g.m, max_size=g.m))
    return MixedGraph(g, tuple(states))


@st.composite
def valid_switchings(draw, m: MixedGraph) -> SwitchingFunction:
    """Random theta constant on each component of the undirected subgraph."""
    parent = list(range(m.n))

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for u, v in m.undirected_edges():
        parent[find(u)] = find(v)
    roots = sorted({find(v) for v in range(m.n)})
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(roots), max_size=len(roots)))
    sign_of = dict(zip(roots, signs))
    return SwitchingFunction(tuple(sign_of[find(v)] for v in range(m.n)))


@st.composite
def permutations_of(draw, n: int) -> tuple[int, ...]:
    return tuple(draw(st.permutations(range(n))))
