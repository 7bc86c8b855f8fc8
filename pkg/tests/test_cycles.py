from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

import oracles
from conftest import to_assignment
from mixedenergy.cycles import (
    CycleType,
    analyze,
    classify,
    cycle_criterion_applies,
    four_cycles,
    holonomy,
    optimum_by_cycles,
)
from mixedenergy.errors import CriterionNotApplicable
from mixedenergy.graphs import Graph, complete_bipartite, complete_graph, cycle_graph, hypercube, path_graph
from mixedenergy.hermitian import GaussianInt, is_optimum
from mixedenergy.hypercube import phi0
from mixedenergy.mixed import MixedGraph, fixture, undirect_all
from strategies import graphs, mixed_graphs, named_regular

QUAD = (0, 1, 2, 3)


def _brute_force_4cycles(g: Graph) -> int:
    found = set()
    for quad in itertools.permutations(range(g.n), 4):
        if all(g.has_edge(quad[i], quad[(i + 1) % 4]) for i in range(4)):
            found.add(frozenset(zip(quad, quad[1:] + quad[:1])) | frozenset(zip(quad[1:] + quad[:1], quad)))
    return len(found)


def test_four_cycle_counts():
    assert len(four_cycles(hypercube(3))) == 6
    assert len(four_cycles(complete_graph(4))) == 3
    assert four_cycles(path_graph(6)) == []


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_four_cycles_brute_force(g):
    quads = four_cycles(g)
    assert len(quads) == len(set(quads)) == _brute_force_4cycles(g)
    for u, x, v, y in quads:
        assert u < min(x, v, y) and x < y


def test_holonomy_examples():
    c4 = cycle_graph(4)
    assert holonomy(undirect_all(c4), QUAD) == GaussianInt(1)
    two_arcs = MixedGraph.from_arcs(c4, [(0, 1), (1, 2)])
    assert holonomy(two_arcs, QUAD) == GaussianInt(-1)
    cyclic = MixedGraph.from_arcs(c4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert holonomy(cyclic, QUAD) == GaussianInt(1)
    assert classify(cyclic, QUAD) is CycleType.INVALID


def test_holonomy_rejects_non_cycle():
    with pytest.raises(ValueError):
        holonomy(undirect_all(cycle_graph(4)), (0, 2, 1, 3))


def test_classify_types():
    c4 = cycle_graph(4)
    adj = MixedGraph.from_arcs(c4, [(0, 1), (1, 2)])
    opp = MixedGraph.from_arcs(c4, [(0, 1), (2, 3)])
    opp_against = MixedGraph.from_arcs(c4, [(0, 1), (3, 2)])  # i * -i = +1
    odd = MixedGraph.from_arcs(c4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert classify(adj, QUAD) is CycleType.TWO_ARC_ADJACENT_U
    assert classify(opp, QUAD) is CycleType.TWO_ARC_OPPOSITE_U
    assert classify(odd, QUAD) is CycleType.ALL_ARC_ODD
    assert classify(opp_against, QUAD) is CycleType.INVALID


@pytest.mark.parametrize("k", range(2, 7))
def test_phi0_cycles_are_all_arc_odd(k):
    assert all(c.type is CycleType.ALL_ARC_ODD for c in analyze(phi0(k).mixed))


def test_h1_cycle_c1():
    # C1 = v1 v2 v4 v3
    assert classify(fixture("H1"), (0, 1, 3, 2)) is CycleType.TWO_ARC_ADJACENT_U


def test_optimum_by_cycles():
    assert optimum_by_cycles(fixture("H1"))
    assert not optimum_by_cycles(undirect_all(hypercube(3)))
    with pytest.raises(CriterionNotApplicable, match="criterion not applicable"):
        optimum_by_cycles(undirect_all(complete_bipartite(3, 3)))


def test_criterion_applicability():
    assert cycle_criterion_applies(hypercube(3)) and cycle_criterion_applies(complete_graph(4))
    assert not cycle_criterion_applies(complete_bipartite(3, 3))
    assert not cycle_criterion_applies(path_graph(4))
    assert not cycle_criterion_applies(complete_graph(2))


@settings(max_examples=200, deadline=None)
@given(mixed_graphs(base=named_regular()))
def test_cycle_criterion_matches_exact_test(m):
    if cycle_criterion_applies(m.underlying):
        assert optimum_by_cycles(m) == is_optimum(m)


@settings(max_examples=150, deadline=None)
@given(mixed_graphs())
def test_holonomy_matches_oracle(m):
    a = to_assignment(m)
    for c in analyze(m):
        ref = oracles.holonomy(a, c.vertices)
        assert complex(c.holonomy.re, c.holonomy.im) == ref
        assert (c.type is CycleType.INVALID) == (ref != -1)
