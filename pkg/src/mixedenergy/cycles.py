"""4-cycles of mixed graphs, their holonomy, and the three admissible cycle types.

For a pair ``u, v`` whose only common neighbors are ``x`` and ``y``, the
off-diagonal entry ``(H^2)[u, v] = h_ux h_xv + h_uy h_yv``. Both terms are
units, so the entry vanishes exactly when the product around ``u x v y`` is -1.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import CriterionNotApplicable
from .graphs import Graph
from .hermitian import ONE, GaussianInt, HermitianMatrix, build_hermitian
from .mixed import MixedGraph

Quad = tuple[int, int, int, int]

MINUS_ONE = GaussianInt(-1, 0)


class CycleType(enum.Enum):
    TWO_ARC_ADJACENT_U = "two-arc-adjacent-undirected"
    TWO_ARC_OPPOSITE_U = "two-arc-opposite-undirected"
    ALL_ARC_ODD = "all-arc-odd"
    INVALID = "invalid"


@dataclass(frozen=True)
class CycleQuad:
    vertices: Quad
    holonomy: GaussianInt
    type: CycleType


def four_cycles(g: Graph) -> list[Quad]:
    """Each 4-cycle once as ``(u, x, v, y)``: ``u`` minimal, ``x < y`` its cycle neighbors."""
    out = []
    for u in range(g.n):
        for x, y in itertools.combinations(sorted(g.adjacency[u]), 2):
            if x < u or y < u:
                continue
            for v in sorted(g.common_neighbors(x, y)):
                if v > u:
                    out.append((u, x, v, y))
    return out


def _cycle_edges(quad: Quad) -> list[tuple[int, int]]:
    return [(quad[i], quad[(i + 1) % 4]) for i in range(4)]


def _check_quad(g: Graph, quad: Quad) -> None:
    if len(set(quad)) != 4 or not all(g.has_edge(a, b) for a, b in _cycle_edges(quad)):
        raise ValueError(f"{quad} is not a 4-cycle of the underlying graph")


def holonomy(m: MixedGraph, quad: Quad, h: HermitianMatrix | None = None) -> GaussianInt:
    _check_quad(m.underlying, quad)
    if h is None:
        h = build_hermitian(m)
    prod = ONE
    for a, b in _cycle_edges(quad):
        prod = prod * h[a, b]
    return prod


def _type_for(m: MixedGraph, quad: Quad, hol: GaussianInt) -> CycleType:
    if hol != MINUS_ONE:
        return CycleType.INVALID
    undirected = [i for i, (a, b) in enumerate(_cycle_edges(quad)) if not m.state(a, b).is_arc]
    if not undirected:
        return CycleType.ALL_ARC_ODD
    # holonomy -1 forces an even number of arcs, so exactly two undirected edges here
    i, j = undirected
    return CycleType.TWO_ARC_OPPOSITE_U if j - i == 2 else CycleType.TWO_ARC_ADJACENT_U


def classify(m: MixedGraph, quad: Quad, h: HermitianMatrix | None = None) -> CycleType:
    return _type_for(m, quad, holonomy(m, quad, h))


def analyze(m: MixedGraph) -> list[CycleQuad]:
    h = build_hermitian(m)
    out = []
    for quad in four_cycles(m.underlying):
        hol = holonomy(m, quad, h)
        out.append(CycleQuad(quad, hol, _type_for(m, quad, hol)))
    return out


def cycle_criterion_applies(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected() or not g.is_regular():
        return False
    return all(len(common) in (0, 2) for _, _, common in g.close_pairs())


def optimum_by_cycles(m: MixedGraph) -> bool:
    """Optimality via 4-cycles: every cycle must have holonomy -1.

    Only defined for connected regular graphs with ``n >= 3`` in which every
    pair of vertices shares either no neighbor or exactly two.
    """
    if not cycle_criterion_applies(m.underlying):
        raise CriterionNotApplicable("criterion not applicable, use is_optimum")
    return all(c.type is not CycleType.INVALID for c in analyze(m))
