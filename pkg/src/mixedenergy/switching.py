"""Switching by diagonal +-1 matrices and switching-equivalence classes.

``D(theta)^-1 H D(theta)`` multiplies ``h_uv`` by ``theta(u) theta(v)``. On an arc
that reverses it; on an undirected edge it would produce the entry -1, which no
mixed graph has, so a valid ``theta`` is constant along undirected edges.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidSwitchingError
from .graphs import AutomorphismGroup, Graph
from .mixed import EdgeState, MixedGraph, emit_mixed_json, parse_mixed_json

_DIRECTION = {EdgeState.UNDIRECTED: 0, EdgeState.FORWARD: 1, EdgeState.BACKWARD: -1}


@dataclass(frozen=True)
class SwitchingFunction:
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("switching values must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def identity(cls, n: int) -> SwitchingFunction:
        return cls((1,) * n)

    @classmethod
    def from_negative_set(cls, n: int, negative: Iterable[int]) -> SwitchingFunction:
        neg = set(negative)
        return cls(tuple(-1 if v in neg else 1 for v in range(n)))

    def __len__(self) -> int:
        return len(self.signs)

    def __getitem__(self, v: int) -> int:
        return self.signs[v]

    def __neg__(self) -> SwitchingFunction:
        return SwitchingFunction(tuple(-s for s in self.signs))

    def __mul__(self, other: SwitchingFunction) -> SwitchingFunction:
        return SwitchingFunction(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def is_valid_for(self, m: MixedGraph) -> bool:
        return all(self.signs[u] == self.signs[v] for u, v in m.undirected_edges())

    def __str__(self) -> str:
        return "[" + ",".join("+1" if s > 0 else "-1" for s in self.signs) + "]"


@dataclass(frozen=True)
class EquivalenceWitness:
    """``apply_switching(m1.relabel(perm), theta) == m2``; ``perm`` None means identity."""

    theta: SwitchingFunction
    perm: tuple[int, ...] | None = None

    def apply(self, m: MixedGraph) -> MixedGraph:
        if self.perm is not None:
            m = m.relabel(self.perm)
        return apply_switching(m, self.theta)

    def to_json_obj(self) -> dict:
        return {"theta": list(self.theta.signs), "perm": list(self.perm) if self.perm else None}


def apply_switching(m: MixedGraph, theta: SwitchingFunction) -> MixedGraph:
    if len(theta) != m.n:
        raise ValueError(f"switching function has length {len(theta)}, graph has {m.n} vertices")
    out = []
    for (u, v), s in zip(m.underlying.edges, m.states):
        if theta[u] * theta[v] == 1:
            out.append(s)
        elif s is EdgeState.UNDIRECTED:
            raise InvalidSwitchingError(
                f"switching changes sign across undirected edge ({u}, {v})"
            )
        else:
            out.append(s.reversed())
    return MixedGraph(m.underlying, tuple(out))


def _solve(g: Graph, ratio: Sequence[int]) -> SwitchingFunction | None:
    # ratio[i] is the forced theta(u) * theta(v) on edge i, or 0 when no sign works
    if 0 in ratio:
        return None
    index = g.edge_index
    theta = [0] * g.n
    for root in range(g.n):
        if theta[root]:
            continue
        theta[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for w in sorted(g.adjacency[x]):
                if not theta[w]:
                    theta[w] = theta[x] * ratio[index[(x, w) if x < w else (w, x)]]
                    queue.append(w)
    for (u, v), r in zip(g.edges, ratio):
        if theta[u] * theta[v] != r:
            return None
    return SwitchingFunction(tuple(theta))


def _ratio(d1: int, d2: int) -> int:
    if (d1 == 0) != (d2 == 0):
        return 0
    return 1 if d1 == d2 else -1


def switching_equivalent(m1: MixedGraph, m2: MixedGraph) -> EquivalenceWitness | None:
    """Find ``theta`` with ``apply_switching(m1, theta) == m2``.

    ``theta`` is +1 at the lowest vertex of each component and is propagated
    along a BFS tree; every edge forces the ratio, so the search is exact.
    """
    if m1.underlying != m2.underlying:
        raise ValueError("switching equivalence needs the same labeled underlying graph")
    ratio = [_ratio(_DIRECTION[a], _DIRECTION[b]) for a, b in zip(m1.states, m2.states)]
    theta = _solve(m1.underlying, ratio)
    return None if theta is None else EquivalenceWitness(theta)


def _directed_lookup(m: MixedGraph) -> dict[tuple[int, int], int]:
    look = {}
    for (u, v), s in zip(m.underlying.edges, m.states):
        d = _DIRECTION[s]
        look[(u, v)] = d
        look[(v, u)] = -d
    return look


def _iso_switch(
    m1: MixedGraph, m2: MixedGraph, aut: AutomorphismGroup, look1=None
) -> EquivalenceWitness | None:
    g = m2.underlying
    look1 = look1 if look1 is not None else _directed_lookup(m1)
    d2 = [_DIRECTION[s] for s in m2.states]
    for perm in aut.perms:
        inv = [0] * g.n
        for v, pv in enumerate(perm):
            inv[pv] = v
        # edge (p, q) of the relabeled graph comes from (inv[p], inv[q]) of m1
        ratio = [_ratio(look1[(inv[p], inv[q])], d) for (p, q), d in zip(g.edges, d2)]
        theta = _solve(g, ratio)
        if theta is not None:
            ident = all(v == pv for v, pv in enumerate(perm))
            return EquivalenceWitness(theta, None if ident else tuple(perm))
    return None


def iso_switching_equivalent(
    m1: MixedGraph, m2: MixedGraph, aut: AutomorphismGroup
) -> EquivalenceWitness | None:
    """Switching equivalence up to an automorphism of the common underlying graph."""
    if m1.underlying != m2.underlying:
        raise ValueError("switching equivalence needs the same labeled underlying graph")
    if aut.graph != m1.underlying or not aut.is_valid_for(m1.underlying):
        raise ValueError("automorphism group does not belong to this underlying graph")
    if m1.signature != m2.signature:
        return None
    return _iso_switch(m1, m2, aut)


@dataclass
class SwitchingClass:
    """Members of one class; the representative is cached, so fill ``members`` before reading it."""

    members: list[MixedGraph] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def a(self) -> int:
        return self.members[0].arc_count

    @property
    def b(self) -> int:
        return self.members[0].undirected_count

    @cached_property
    def representative_json(self) -> str:
        return min(emit_mixed_json(m) for m in self.members)

    @property
    def representative(self) -> MixedGraph:
        return parse_mixed_json(self.representative_json)

    def __contains__(self, m: MixedGraph) -> bool:
        return m in self.members

    def summary(self) -> dict:
        return {
            "size": self.size,
            "a": self.a,
            "b": self.b,
            "representative": json.loads(self.representative_json),
        }


def partition_classes(
    ms: Sequence[MixedGraph], aut: AutomorphismGroup | None = None
) -> list[SwitchingClass]:
    """Partition by switching equivalence combined with automorphisms in ``aut``.

    With ``aut`` None only the identity is used (pure switching classes).
    Classes are sorted by arc count (descending), then representative.
    """
    if not ms:
        return []
    g = ms[0].underlying
    if any(m.underlying != g for m in ms):
        raise ValueError("all mixed graphs must share one labeled underlying graph")
    if aut is None:
        aut = AutomorphismGroup.trivial(g)
    elif aut.graph != g or not aut.is_valid_for(g):
        raise ValueError("automorphism group does not belong to this underlying graph")
    classes: dict[tuple[int, int], list[tuple[dict, SwitchingClass]]] = {}
    for m in ms:
        bucket = classes.setdefault(m.signature, [])
        for look, cls in bucket:
            if _iso_switch(cls.members[0], m, aut, look) is not None:
                cls.members.append(m)
                break
        else:
            bucket.append((_directed_lookup(m), SwitchingClass([m])))
    out = [cls for bucket in classes.values() for _, cls in bucket]
    return sorted(out, key=lambda c: (-c.a, c.representative_json))


def classes_to_json_obj(classes: Sequence[SwitchingClass]) -> dict:
    return {"classes": [c.summary() for c in classes]}

