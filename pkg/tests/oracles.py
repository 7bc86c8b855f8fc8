"""Independent reference computations used to check the package.

Nothing here calls the package's matrix, cycle, switching or census code: an
assignment is a dict ``{(u, v): code}`` with ``u < v`` and code 0 undirected,
1 ``u -> v``, 2 ``v -> u``; matrices are numpy complex128 arrays; spectra come
from LAPACK via ``numpy.linalg.eigvalsh``; graph6 and isomorphism from networkx.
"""

from __future__ import annotations

import itertools
import math

import networkx as nx
import numpy as np

UNDIRECTED, FORWARD, BACKWARD = 0, 1, 2


def edges_of(n: int, pairs) -> list[tuple[int, int]]:
    return sorted((min(u, v), max(u, v)) for u, v in pairs)


def hermitian(n: int, assignment: dict) -> np.ndarray:
    h = np.zeros((n, n), dtype=np.complex128)
    for (u, v), code in assignment.items():
        if code == UNDIRECTED:
            h[u, v] = h[v, u] = 1
        elif code == FORWARD:
            h[u, v], h[v, u] = 1j, -1j
        else:
            h[u, v], h[v, u] = -1j, 1j
    return h


def max_degree(n: int, edges) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg, default=0)


def is_optimum(n: int, assignment: dict) -> bool:
    # entries are small Gaussian integers, so complex128 products are exact
    h = hermitian(n, assignment)
    delta = max_degree(n, assignment)
    return bool(np.array_equal(h @ h, delta * np.eye(n)))


def optimum_mask(n: int, edges, codes: np.ndarray, chunk: int = 20000) -> np.ndarray:
    """Vectorized ``is_optimum`` for a batch of code rows (shape ``(N, |E|)``)."""
    delta = max_degree(n, edges)
    values = np.array([1, 1j, -1j])
    eye = delta * np.eye(n)
    out = np.zeros(len(codes), dtype=bool)
    us = np.array([u for u, _ in edges], dtype=np.intp)
    vs = np.array([v for _, v in edges], dtype=np.intp)
    for start in range(0, len(codes), chunk):
        c = codes[start : start + chunk]
        h = np.zeros((len(c), n, n), dtype=np.complex128)
        vals = values[c]
        h[:, us, vs] = vals
        h[:, vs, us] = np.conj(vals)
        sq = h @ h
        out[start : start + chunk] = np.all(sq == eye, axis=(1, 2))
    return out


def all_codes(m: int, choices=(0, 1, 2)) -> np.ndarray:
    return np.array(list(itertools.product(choices, repeat=m)), dtype=np.int64)


def energy(n: int, assignment: dict) -> float:
    if n == 0:
        return 0.0
    return float(np.abs(np.linalg.eigvalsh(hermitian(n, assignment))).sum())


def spectrum(n: int, assignment: dict) -> np.ndarray:
    return np.linalg.eigvalsh(hermitian(n, assignment))


def holonomy(assignment: dict, quad) -> complex:
    n = max(max(e) for e in assignment) + 1
    h = hermitian(n, assignment)
    prod = 1 + 0j
    for i in range(4):
        prod *= h[quad[i], quad[(i + 1) % 4]]
    return prod


# --- switching orbits ------------------------------------------------------


def switch(assignment: dict, negative: set) -> dict | None:
    """Conjugate by -1 on ``negative``; None if an undirected edge crosses the cut."""
    out = {}
    for (u, v), code in assignment.items():
        if (u in negative) != (v in negative):
            if code == UNDIRECTED:
                return None
            code = 3 - code
        out[(u, v)] = code
    return out


def relabel(assignment: dict, perm) -> dict:
    out = {}
    for (u, v), code in assignment.items():
        pu, pv = perm[u], perm[v]
        if pu < pv:
            out[(pu, pv)] = code
        else:
            out[(pv, pu)] = code if code == UNDIRECTED else 3 - code
    return out


def undirected_components(n: int, assignment: dict) -> list[set]:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(e for e, c in assignment.items() if c == UNDIRECTED)
    return [set(c) for c in nx.connected_components(g)]


def nx_automorphisms(n: int, edges) -> list[tuple[int, ...]]:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    gm = nx.algorithms.isomorphism.GraphMatcher(g, g)
    return [tuple(m[v] for v in range(n)) for m in gm.isomorphisms_iter()]


def orbits(n: int, hits: list[dict], perms) -> list[list[dict]]:
    """Orbits of ``hits`` under switchings and the given vertex permutations.

    Orbits are the connected components of the graph whose moves are: switch one
    component of the undirected subgraph, or relabel by one permutation.
    """
    key = lambda a: tuple(sorted(a.items()))
    index = {key(a): i for i, a in enumerate(hits)}
    parent = list(range(len(hits)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(hits):
        moves = [switch(a, comp) for comp in undirected_components(n, a)]
        moves += [relabel(a, p) for p in perms]
        for b in moves:
            j = index[key(b)]  # optimum is invariant, so the image is a hit
            parent[find(i)] = find(j)
    groups: dict[int, list[dict]] = {}
    for i, a in enumerate(hits):
        groups.setdefault(find(i), []).append(a)
    return list(groups.values())


def brute_force_theta(n: int, a1: dict, a2: dict) -> list[tuple[int, ...]]:
    """Every theta in {+-1}^n carrying ``a1`` onto ``a2``."""
    out = []
    for neg in itertools.product((False, True), repeat=n):
        img = switch(a1, {v for v in range(n) if neg[v]})
        if img == a2:
            out.append(tuple(-1 if x else 1 for x in neg))
    return out


# --- graphs ----------------------------------------------------------------


def nx_graph(n: int, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def sampled_cubic_classes(n: int, samples: int, seed: int) -> list[nx.Graph]:
    """Isomorphism classes seen among random connected cubic graphs on ``n`` vertices."""
    rng = np.random.default_rng(seed)
    buckets: dict[str, list[nx.Graph]] = {}
    for _ in range(samples):
        g = nx.random_regular_graph(3, n, seed=int(rng.integers(2**31)))
        if not nx.is_connected(g):
            continue
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(g, iterations=4), [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return [g for bucket in buckets.values() for g in bucket]


def hypercube_edges(k: int) -> list[tuple[int, int]]:
    n = 1 << k
    return [(v, v | 1 << j) for v in range(n) for j in range(k) if not v >> j & 1]


def phi0_assignment(k: int) -> dict:
    """Closed form of the recursive orientation, written out independently.

    In Q_k the edge ``v -- v | 2**j`` lies in a copy at level ``j + 1``; each
    higher level whose bit is set in ``v`` puts it in an upper copy, which
    reverses it once. Cross edges point up before any reversal.
    """
    out = {}
    for v, w in hypercube_edges(k):
        j = (w ^ v).bit_length() - 1
        flips = bin(v >> (j + 1)).count("1")
        out[(v, w)] = FORWARD if flips % 2 == 0 else BACKWARD
    return out


SQRT3 = math.sqrt(3)
