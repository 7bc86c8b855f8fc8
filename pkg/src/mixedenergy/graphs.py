"""Undirected simple graphs, small generators, graph6 I/O and brute-force isomorphism."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import Graph6Error

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    Edges are normalized to ``(u, v)`` with ``u < v`` and stored sorted, so two
    graphs compare equal exactly when they have the same labeled edge set.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        return self.adjacency[u] & self.adjacency[v]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in sorted(self.adjacency[x]):
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self) -> tuple[int, ...] | None:
        """2-coloring with color 0 on the lowest vertex of each component, or None."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
        return tuple(color)

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def close_pairs(self) -> Iterator[tuple[int, int, frozenset[int]]]:
        """Pairs ``u < v`` at distance 1 or 2 that share a neighbor, with that common set."""
        for u in range(self.n):
            reach = set()
            for w in self.adjacency[u]:
                reach |= self.adjacency[w]
            for v in sorted(reach):
                if v > u:
                    yield u, v, self.common_neighbors(u, v)

    def relabel(self, perm: tuple[int, ...]) -> Graph:
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# --- generators -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def prism_graph() -> Graph:
    """Triangular prism C3 x K2."""
    return Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))


@lru_cache(maxsize=16)
def hypercube(k: int) -> Graph:
    """Q_k on labels ``0..2**k - 1``; ``v`` is adjacent to ``v ^ (1 << j)``.

    The top bit splits the vertices into the lower copy (labels ``< 2**(k-1)``)
    and the upper copy; the 1-indexed vertex ``t`` of the recursive
    construction is label ``t - 1`` here, so ``t <-> t + 2**(k-1)`` becomes
    ``v <-> v | 2**(k-1)``.
    """
    if k < 1:
        raise ValueError("hypercube needs k >= 1")
    n = 1 << k
    return Graph(n, tuple((v, v ^ (1 << j)) for v in range(n) for j in range(k) if not v >> j & 1))


def named_graph(name: str) -> Graph:
    """Resolve shortcuts such as ``K4``, ``Q3``, ``C5``, ``K33`` or ``prism``."""
    key = name.strip()
    if key.lower() == "prism":
        return prism_graph()
    if key.upper() == "K33":
        return complete_bipartite(3, 3)
    head, tail = key[:1].upper(), key[1:]
    if tail.isdigit():
        if head == "K":
            return complete_graph(int(tail))
        if head == "Q":
            return hypercube(int(tail))
        if head == "C":
            return cycle_graph(int(tail))
        if head == "P":
            return path_graph(int(tail))
    raise ValueError(f"unknown graph name {name!r}")


# --- graph6 ---------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _upper_triangle(n: int) -> Iterator[Edge]:
    # column-major order over the strict upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record (short form, ``n <= 62``)."""
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    offset = 0
    if data.startswith(_G6_HEADER):
        offset = len(_G6_HEADER)
    body = data[offset:]
    if not body:
        raise Graph6Error("empty graph6 record", offset)
    for pos, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid graph6 byte {byte}", offset + pos)
    n = body[0] - 63
    if n == 63:
        raise Graph6Error("long-form graph6 header (n > 62) is not supported", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = body[1:]
    if len(payload) < nbytes:
        raise Graph6Error(
            f"truncated bit stream: expected {nbytes} data bytes, got {len(payload)}",
            offset + len(body),
        )
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after bit stream", offset + 1 + nbytes)
    edges = []
    for idx, (i, j) in enumerate(_upper_triangle(n)):
        chunk = payload[idx // 6] - 63
        if chunk >> (5 - idx % 6) & 1:
            edges.append((i, j))
    pad_bits = nbytes * 6 - nbits
    if pad_bits and (payload[-1] - 63) & ((1 << pad_bits) - 1):
        raise Graph6Error("nonzero padding bits", offset + nbytes)
    return Graph(n, tuple(edges))


def emit_graph6(g: Graph) -> bytes:
    if g.n > 62:
        raise Graph6Error(f"n = {g.n} needs the long graph6 form, which is not supported", 0)
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_triangle(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return bytes(out)


def read_graph6_lines(lines: Iterable[bytes | str]) -> list[Graph]:
    graphs = []
    for line in lines:
        s = line.strip()
        if s:
            graphs.append(parse_graph6(s))
    return graphs


# --- isomorphism ----------------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    # BFS from high-degree vertices so that each new vertex is constrained early
    order: list[int] = []
    seen = set()
    for s in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(g.adjacency[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def isomorphisms(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every bijection ``sigma`` (as a tuple) with ``sigma(E(g)) = E(h)``."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return
    order = _search_order(g)
    gadj, hadj = g.adjacency, h.adjacency
    image = [-1] * g.n
    used = [False] * h.n

    def extend(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == len(order):
            yield tuple(image)
            return
        v = order[depth]
        placed = order[:depth]
        for w in range(h.n):
            if used[w] or len(hadj[w]) != len(gadj[v]):
                continue
            if any((u in gadj[v]) != (image[u] in hadj[w]) for u in placed):
                continue
            image[v], used[w] = w, True
            yield from extend(depth + 1)
            image[v], used[w] = -1, False

    yield from extend(0)


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    return next(isomorphisms(g, h), None)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


MAX_AUTOMORPHISM_N = 10


@dataclass(frozen=True)
class AutomorphismGroup:
    """Explicit list of vertex permutations; ``perms[0]`` is the identity."""

    graph: Graph
    perms: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.perms)

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self._perm_set

    @cached_property
    def _perm_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.perms)

    def is_valid_for(self, g: Graph) -> bool:
        return all(g.relabel(p) == g for p in self.perms)

    @classmethod
    def trivial(cls, g: Graph) -> AutomorphismGroup:
        return cls(g, (tuple(range(g.n)),))


def automorphisms(g: Graph) -> AutomorphismGroup:
    """All automorphisms of ``g`` by pruned brute force (``n <= 10``)."""
    if g.n > MAX_AUTOMORPHISM_N:
        raise ValueError(
            f"brute-force automorphism search is limited to n <= {MAX_AUTOMORPHISM_N}, got n = {g.n}"
        )
    ident = tuple(range(g.n))
    perms = sorted(isomorphisms(g, g))
    perms.remove(ident)
    return AutomorphismGroup(g, (ident, *perms))


# --- cubic graph generation ----------------------------------------------


def _invariant(g: Graph) -> tuple:
    profile = []
    for v in range(g.n):
        dist = g.distances_from(v)
        tri = sum(1 for a, b in itertools.combinations(sorted(g.adjacency[v]), 2) if g.has_edge(a, b))
        sq = sum(len(g.common_neighbors(v, u)) - 1 for u in range(g.n) if dist[u] == 2)
        profile.append((tri, sq, tuple(sorted(dist))))
    return tuple(sorted(profile))


def _cubic_labelings(n: int) -> Iterator[Graph]:
    # Fill vertices in label order. Untouched labels are interchangeable, so
    # only the smallest untouched label is ever offered as a new neighbor.
    adj: list[set[int]] = [set() for _ in range(n)]

    def fill(v: int, lo: int, hi: int) -> Iterator[Graph]:
        while v < n and len(adj[v]) == 3:
            v, lo = v + 1, v + 2
        if v == n:
            yield Graph(n, tuple((a, b) for a in range(n) for b in adj[a] if a < b))
            return
        if v > hi:
            return  # disconnected from everything filled so far
        for w in range(max(lo, v + 1), min(hi + 2, n)):
            if len(adj[w]) == 3 or w in adj[v]:
                continue
            adj[v].add(w)
            adj[w].add(v)
            yield from fill(v, w + 1, max(hi, w))
            adj[v].discard(w)
            adj[w].discard(v)

    yield from fill(0, 1, 0)


CUBIC_RANGE = (4, 6, 8, 10)


def connected_cubic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected 3-regular graphs on ``n`` vertices."""
    if n not in CUBIC_RANGE:
        raise ValueError(f"connected_cubic_graphs supports n in {CUBIC_RANGE}, got {n}")
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in _cubic_labelings(n):
        if not g.is_connected():
            continue
        bucket = buckets.setdefault(_invariant(g), [])
        if any(are_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return sorted(reps, key=emit_graph6)
