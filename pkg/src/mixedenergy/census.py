"""Exhaustive and pruned enumeration of optimum edge-state assignments.

The pruned search assigns edge states in BFS edge order and, as soon as the
last edge of a vertex pair's length-2 paths is placed, checks that the pair's
entry of ``H^2`` vanishes. Entries of ``H`` on edges are powers of ``i``, so a
path ``p - w - q`` contributes ``i**e`` with ``e`` an exponent mod 4 and the
entry is zero iff the exponents 0 and 2, and 1 and 3, occur equally often. For
a pair with exactly two common neighbors this is the 4-cycle holonomy test.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import random
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import VerificationError
from .graphs import (
    AutomorphismGroup,
    Graph,
    MAX_AUTOMORPHISM_N,
    are_isomorphic,
    automorphisms,
    complete_graph,
    connected_cubic_graphs,
    emit_graph6,
    hypercube,
)
from .hermitian import build_hermitian, even_common_neighbors, is_optimum
from .hypercube import phi0, reduce_to_phi0
from .mixed import EdgeState, MixedGraph, emit_mixed_json, fixture, parse_mixed_json
from .spectra import eigenvalues_many
from .switching import SwitchingClass, apply_switching, partition_classes

Edge = tuple[int, int]

MODES = ("mixed", "oriented")
FULL_MAX_EDGES = 16
PRUNED_MAX_EDGES = 40
DEFAULT_SPLIT_DEPTH = 6

_STATES = (EdgeState.UNDIRECTED, EdgeState.FORWARD, EdgeState.BACKWARD)
_CHOICES = {"mixed": (0, 1, 2), "oriented": (1, 2)}
# power of i carried by h_uv (u < v) and by h_vu, indexed by state code
_EXP_LOW_HIGH = (0, 1, 3)
_EXP_HIGH_LOW = (0, 3, 1)


def bfs_edge_order(g: Graph) -> tuple[Edge, ...]:
    """Edges in the order a BFS from vertex 0 first meets them."""
    seen_v = [False] * g.n
    seen_e: set[Edge] = set()
    order: list[Edge] = []
    for root in range(g.n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for w in sorted(g.adjacency[x]):
                e = (x, w) if x < w else (w, x)
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return tuple(order)


@dataclass(frozen=True)
class SearchSpace:
    graph: Graph
    mode: str
    edge_order: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if sorted(self.edge_order) != list(self.graph.edges):
            raise ValueError("edge order must list every edge exactly once")

    @classmethod
    def build(cls, graph: Graph, mode: str = "mixed") -> SearchSpace:
        return cls(graph, mode, bfs_edge_order(graph))

    @property
    def choices(self) -> tuple[int, ...]:
        return _CHOICES[self.mode]

    @property
    def raw_size(self) -> int:
        return len(self.choices) ** self.graph.m

    def to_mixed(self, codes: Sequence[int]) -> MixedGraph:
        states = {e: _STATES[c] for e, c in zip(self.edge_order, codes)}
        return MixedGraph(self.graph, tuple(states[e] for e in self.graph.edges))


# --- pruned search --------------------------------------------------------


@dataclass(frozen=True)
class _Plan:
    m: int
    choices: tuple[int, ...]
    # checks[d]: constraints completed when position d is placed; each is a tuple
    # of paths (pos1, table1, pos2, table2)
    checks: tuple[tuple[tuple[tuple[int, tuple, int, tuple], ...], ...], ...]
    feasible: bool


def _compile(space: SearchSpace) -> _Plan:
    g = space.graph
    pos = {e: i for i, e in enumerate(space.edge_order)}

    def leg(a: int, b: int) -> tuple[int, tuple]:
        # position and exponent table of h_ab
        if a < b:
            return pos[(a, b)], _EXP_LOW_HIGH
        return pos[(b, a)], _EXP_HIGH_LOW

    checks: list[list] = [[] for _ in range(g.m)]
    for p, q, common in g.close_pairs():
        paths = tuple(leg(p, w) + leg(w, q) for w in sorted(common))
        depth = max(max(pa, pb) for pa, _, pb, _ in paths)
        checks[depth].append(paths)
    return _Plan(
        g.m,
        _CHOICES[space.mode],
        tuple(tuple(c) for c in checks),
        feasible=g.is_regular(),
    )


def _pair_ok(paths, assign) -> bool:
    if len(paths) == 2:
        (a1, t1, b1, u1), (a2, t2, b2, u2) = paths
        return ((t1[assign[a1]] + u1[assign[b1]]) - (t2[assign[a2]] + u2[assign[b2]])) & 3 == 2
    count = [0, 0, 0, 0]
    for a, t, b, u in paths:
        count[(t[assign[a]] + u[assign[b]]) & 3] += 1
    return count[0] == count[2] and count[1] == count[3]


def _search(plan: _Plan, prefix: tuple[int, ...], stop: int) -> tuple[list[tuple[int, ...]], int]:
    """DFS below ``prefix`` down to depth ``stop``; returns surviving assignments and nodes placed."""
    assign = list(prefix) + [0] * (plan.m - len(prefix))
    out: list[tuple[int, ...]] = []
    nodes = 0
    checks, choices = plan.checks, plan.choices

    def rec(d: int) -> None:
        nonlocal nodes
        if d == stop:
            out.append(tuple(assign[:stop]))
            return
        here = checks[d]
        for c in choices:
            assign[d] = c
            nodes += 1
            for paths in here:
                if not _pair_ok(paths, assign):
                    break
            else:
                rec(d + 1)

    rec(len(prefix))
    return out, nodes


def _subtree_job(args: tuple[_Plan, tuple[int, ...]]) -> tuple[list[tuple[int, ...]], int]:
    plan, prefix = args
    return _search(plan, prefix, plan.m)


def _pruned(space: SearchSpace, jobs: int, split_depth: int) -> tuple[list[tuple[int, ...]], int]:
    plan = _compile(space)
    if not plan.feasible:
        return [], 0
    split = min(split_depth, plan.m)
    prefixes, nodes = _search(plan, (), split)
    tasks = [(plan, p) for p in prefixes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_subtree_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_subtree_job(t) for t in tasks]
    hits = []
    for sub_hits, sub_nodes in results:
        hits.extend(sub_hits)
        nodes += sub_nodes
    return hits, nodes


def _full(space: SearchSpace) -> tuple[list[tuple[int, ...]], int]:
    hits = []
    for codes in itertools.product(space.choices, repeat=space.graph.m):
        if is_optimum(space.to_mixed(codes)):
            hits.append(codes)
    return hits, space.raw_size


def enumerate_optimum(
    space: SearchSpace,
    strategy: str = "pruned",
    jobs: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> tuple[list[MixedGraph], int]:
    """All optimum assignments of ``space`` and the number of search nodes visited.

    ``full`` tests every assignment with the exact matrix criterion; ``pruned``
    backtracks. Both return hits in lexicographic order of the edge-order codes.
    """
    m = space.graph.m
    if strategy == "full":
        if m > FULL_MAX_EDGES:
            raise ValueError(f"full enumeration is limited to {FULL_MAX_EDGES} edges, got {m}")
        codes, nodes = _full(space)
    elif strategy == "pruned":
        if m > PRUNED_MAX_EDGES:
            raise ValueError(f"pruned enumeration is limited to {PRUNED_MAX_EDGES} edges, got {m}")
        codes, nodes = _pruned(space, jobs, split_depth)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return [space.to_mixed(c) for c in codes], nodes


# --- reports --------------------------------------------------------------


@dataclass
class CensusReport:
    graph: str
    mode: str
    strategy: str
    equivalence: str
    raw_hits: int
    classes: list[dict]
    nodes_visited: int
    ms: float | None = None

    def to_json_obj(self, meta: bool = True) -> dict:
        obj = {
            "graph": self.graph,
            "mode": self.mode,
            "strategy": self.strategy,
            "equivalence": self.equivalence,
            "raw_hits": self.raw_hits,
            "classes": self.classes,
            "nodes_visited": self.nodes_visited,
        }
        if meta:
            obj["ms"] = self.ms
        return obj

    def to_json(self, meta: bool = True) -> str:
        return json.dumps(self.to_json_obj(meta), indent=2) + "\n"


@dataclass
class CensusResult:
    report: CensusReport
    hits: list[MixedGraph]
    classes: list[SwitchingClass] = field(default_factory=list)

    def class_of(self, m: MixedGraph) -> int | None:
        key = emit_mixed_json(m)
        for i, c in enumerate(self.classes):
            if key in {emit_mixed_json(x) for x in c.members}:
                return i
        return None


def reverify_sample(
    hits: Sequence[MixedGraph], fraction: float = 0.01, seed: int = 0, tol: float = 1e-9
) -> int:
    """Numerically re-check a random sample of hits: every eigenvalue is ``+-sqrt(Delta)``
    and the energy meets ``n * sqrt(Delta)``. Returns the sample size."""
    if not hits:
        return 0
    k = max(1, math.ceil(fraction * len(hits)))
    sample = random.Random(seed).sample(list(hits), k)
    specs = eigenvalues_many([build_hermitian(m) for m in sample])
    for m, spec in zip(sample, specs):
        root = math.sqrt(m.underlying.max_degree)
        worst = max((abs(abs(x) - root) for x in spec.eigenvalues), default=0.0)
        gap = m.n * root - spec.energy
        if worst > tol or abs(gap) > tol:
            raise VerificationError(
                f"hit {emit_mixed_json(m)} fails the spectral re-check (eigenvalue error {worst:.2e}, gap {gap:.2e})"
            )
    return k


def default_group(g: Graph) -> AutomorphismGroup:
    """Full automorphism group where brute force is feasible, else the trivial group."""
    if g.n <= MAX_AUTOMORPHISM_N:
        return automorphisms(g)
    return AutomorphismGroup.trivial(g)


def run_census(
    graph: Graph,
    mode: str = "mixed",
    strategy: str = "pruned",
    jobs: int = 1,
    partition: bool = True,
    aut: AutomorphismGroup | None = None,
    verify: bool = True,
) -> CensusResult:
    t0 = time.perf_counter()
    space = SearchSpace.build(graph, mode)
    hits, nodes = enumerate_optimum(space, strategy, jobs)
    if verify:
        reverify_sample(hits)
    classes: list[SwitchingClass] = []
    equivalence = "none"
    if partition and hits:
        group = aut if aut is not None else default_group(graph)
        equivalence = "switching" if group.order == 1 else "switching+automorphism"
        classes = partition_classes(hits, group)
    ms = (time.perf_counter() - t0) * 1000
    report = CensusReport(
        graph=emit_graph6(graph).decode("ascii"),
        mode=mode,
        strategy=strategy,
        equivalence=equivalence,
        raw_hits=len(hits),
        classes=[c.summary() for c in classes],
        nodes_visited=nodes,
        ms=round(ms, 3),
    )
    return CensusResult(report, hits, classes)


def save_hits(path: str | Path, hits: Iterable[MixedGraph]) -> None:
    """One canonical mixed-graph JSON object per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for m in hits:
            fh.write(emit_mixed_json(m) + "\n")


def load_hits(path: str | Path) -> list[MixedGraph]:
    with open(path, encoding="utf-8") as fh:
        return [parse_mixed_json(line) for line in fh if line.strip()]


# --- classification runs ------------------------------------------------------


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise VerificationError(message)


def reproduce_k4_classes(strategy: str = "full") -> CensusResult:
    """Mixed census of K4: two classes, the oriented one and the one holding G1."""
    res = run_census(complete_graph(4), "mixed", strategy)
    _check(len(res.classes) == 2, f"expected 2 classes on K4, found {len(res.classes)}")
    sigs = sorted((c.a, c.b) for c in res.classes)
    _check(sigs == [(3, 3), (6, 0)], f"expected (a, b) signatures (3,3) and (6,0), found {sigs}")
    idx = res.class_of(fixture("G1"))
    _check(idx is not None and res.classes[idx].a == 3, "fixture G1 is not in the a=3 class")
    return res


Q3_ARC_COUNTS = [12, 9, 8, 8, 7, 6, 6]


def reproduce_q3_classes(strategy: str = "pruned", jobs: int = 1) -> CensusResult:
    """Mixed census of Q3: seven classes with arc counts 12, 9, 8, 8, 7, 6, 6."""
    res = run_census(hypercube(3), "mixed", strategy, jobs)
    counts = sorted((c.a for c in res.classes), reverse=True)
    _check(len(res.classes) == 7, f"expected 7 classes on Q3, found {len(res.classes)}")
    _check(counts == Q3_ARC_COUNTS, f"arc counts {counts} != {Q3_ARC_COUNTS}")
    bad = [m.arc_count for m in res.hits if not m.is_oriented() and not 6 <= m.arc_count <= 9]
    _check(not bad, f"non-oriented hits with arc count outside [6, 9]: {sorted(set(bad))}")
    where = {name: res.class_of(fixture(name)) for name in ("H1", "H3", "H4", "H5", "H6")}
    _check(None not in where.values(), f"fixtures missing from census: {where}")
    _check(len(set(where.values())) == 5, f"fixtures share classes: {where}")
    oriented = [c for c in res.classes if c.a == 12]
    _check(len(oriented) == 1, "expected exactly one oriented class")
    theta = reduce_to_phi0(oriented[0].representative)
    _check(
        apply_switching(oriented[0].representative, theta) == phi0(3).mixed,
        "oriented representative does not reduce to phi0(3)",
    )
    return res


def reproduce_hypercube_orientations(k: int = 3, jobs: int = 1) -> CensusResult:
    """All optimum orientations of Q_k: ``2**(2**k - 1)`` of them, each switching to phi0."""
    g = hypercube(k)
    t0 = time.perf_counter()
    space = SearchSpace.build(g, "oriented")
    hits, nodes = enumerate_optimum(space, "pruned", jobs)
    expected = 1 << (g.n - 1)
    _check(len(hits) == expected, f"expected {expected} optimum orientations of Q{k}, found {len(hits)}")
    reverify_sample(hits)
    target = phi0(k).mixed
    for m in hits:
        theta = reduce_to_phi0(m)
        _check(apply_switching(m, theta) == target, "reduction does not reproduce phi0")
    cls = SwitchingClass(list(hits))
    ms = (time.perf_counter() - t0) * 1000
    report = CensusReport(
        graph=emit_graph6(g).decode("ascii"),
        mode="oriented",
        strategy="pruned",
        equivalence="switching",
        raw_hits=len(hits),
        classes=[cls.summary()],
        nodes_visited=nodes,
        ms=round(ms, 3),
    )
    return CensusResult(report, hits, [cls])


@dataclass
class ScanRow:
    n: int
    graph6: str
    name: str
    parity_ok: bool
    census_run: bool
    raw_hits: int
    nodes_visited: int


def cubic_underlying_scan(n_max: int = 8, verify_filtered: bool = False) -> list[ScanRow]:
    """Every connected cubic graph up to ``n_max`` vertices; only K4 and Q3 may carry optimum states."""
    if n_max not in (4, 6, 8, 10):
        raise ValueError("n_max must be one of 4, 6, 8, 10")
    k4, q3 = complete_graph(4), hypercube(3)
    rows = []
    for n in range(4, n_max + 1, 2):
        for g in connected_cubic_graphs(n):
            name = "K4" if are_isomorphic(g, k4) else "Q3" if are_isomorphic(g, q3) else ""
            parity = even_common_neighbors(g)
            hits, nodes, ran = 0, 0, False
            if parity or verify_filtered:
                found, nodes = enumerate_optimum(SearchSpace.build(g, "mixed"), "pruned")
                hits, ran = len(found), True
            rows.append(ScanRow(n, emit_graph6(g).decode("ascii"), name, parity, ran, hits, nodes))
    for r in rows:
        if r.name:
            _check(r.raw_hits > 0, f"{r.name} ({r.graph6}) should admit optimum assignments")
        else:
            _check(r.raw_hits == 0, f"cubic graph {r.graph6} unexpectedly admits optimum assignments")
    return rows


def scan_to_csv(rows: Sequence[ScanRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "graph6", "name", "parity_ok", "census_run", "raw_hits", "nodes_visited"])
    for r in rows:
        writer.writerow([r.n, r.graph6, r.name, int(r.parity_ok), int(r.census_run), r.raw_hits, r.nodes_visited])
    return buf.getvalue()
