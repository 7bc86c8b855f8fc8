"""The recursive optimum orientation of the hypercube and reduction to it by switching.

Labels follow ``graphs.hypercube``: the lower copy ``V1`` is the labels below
``2**(k-1)``, the upper copy ``V2`` has the top bit set, and 1-indexed vertex
``t`` is label ``t - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cycles import CycleType, analyze
from .graphs import hypercube
from .hermitian import build_hermitian, hermitian_square, is_optimum
from .mixed import EdgeState, MixedGraph, reverse_all_arcs
from .spectra import hermitian_energy
from .switching import SwitchingFunction, switching_equivalent
from .errors import VerificationError

EXACT_MAX_K = 10
ENERGY_MAX_K = 8


@dataclass(frozen=True)
class HypercubeOrientation:
    k: int
    mixed: MixedGraph

    def __post_init__(self) -> None:
        if self.mixed.underlying != hypercube(self.k):
            raise ValueError(f"underlying graph is not the labeled hypercube Q{self.k}")
        if not self.mixed.is_oriented():
            raise ValueError("hypercube orientation has an undirected edge")

    @classmethod
    def from_mixed(cls, m: MixedGraph) -> HypercubeOrientation:
        k = m.n.bit_length() - 1
        if k < 1 or m.n != 1 << k:
            raise ValueError(f"{m.n} vertices is not a hypercube order")
        return cls(k, m)


@lru_cache(maxsize=16)
def phi0(k: int) -> HypercubeOrientation:
    """Q1 is ``0 -> 1``; Q_k is phi0 on V1, reversed phi0 on V2, and ``t -> t + 2**(k-1)``."""
    if k < 1:
        raise ValueError("phi0 needs k >= 1")
    arcs = [(0, 1)]
    for j in range(2, k + 1):
        half = 1 << (j - 1)
        arcs = arcs + [(h + half, t + half) for t, h in arcs] + [(t, t + half) for t in range(half)]
    return HypercubeOrientation(k, MixedGraph.from_arcs(hypercube(k), arcs))


def minus_phi0(k: int) -> HypercubeOrientation:
    return HypercubeOrientation(k, reverse_all_arcs(phi0(k).mixed))


def bipartition_switching(k: int) -> SwitchingFunction:
    """-1 on the odd-weight side of Q_k; it carries phi0 to its reversal."""
    return SwitchingFunction(tuple(-1 if bin(v).count("1") % 2 else 1 for v in range(1 << k)))


def is_optimum_orientation(o: HypercubeOrientation | MixedGraph, by_cycles: bool = False) -> bool:
    """Exact ``H^2 = kI`` test; ``by_cycles`` checks every 4-cycle is all-arc-odd instead.

    On a hypercube the two agree, the matrix test is just faster.
    """
    m = o.mixed if isinstance(o, HypercubeOrientation) else o
    if by_cycles:
        return all(c.type is CycleType.ALL_ARC_ODD for c in analyze(m))
    return m.is_oriented() and is_optimum(m)


@dataclass(frozen=True)
class Phi0Report:
    k: int
    n: int
    square_is_kI: bool
    cycles: int
    all_cycles_all_arc_odd: bool
    energy: float | None
    expected_energy: float

    def lines(self) -> list[str]:
        out = [
            f"k={self.k} n={self.n}",
            f"H^2 = {self.k}I exactly: {'yes' if self.square_is_kI else 'no'}",
            f"4-cycles: {self.cycles}, all all-arc-odd: {'yes' if self.all_cycles_all_arc_odd else 'no'}",
        ]
        if self.energy is None:
            out.append(f"energy: skipped (k > {ENERGY_MAX_K}); expected {self.expected_energy:.9f}")
        else:
            out.append(f"energy: {self.energy:.9f} expected {self.expected_energy:.9f}")
        return out


def verify_phi0(k: int, energy: bool | None = None) -> Phi0Report:
    """Exact ``H^2 = kI`` and 4-cycle check, plus the numeric energy for ``k <= 8``."""
    if not 1 <= k <= EXACT_MAX_K:
        raise ValueError(f"verify_phi0 supports 1 <= k <= {EXACT_MAX_K}")
    m = phi0(k).mixed
    n = m.n
    square_ok = hermitian_square(build_hermitian(m)).is_scalar(k)
    cycles = analyze(m)
    cycles_ok = all(c.type is CycleType.ALL_ARC_ODD for c in cycles)
    expected = n * math.sqrt(k)
    want_energy = k <= ENERGY_MAX_K if energy is None else energy
    e = hermitian_energy(m) if want_energy else None
    report = Phi0Report(k, n, square_ok, len(cycles), cycles_ok, e, expected)
    if not square_ok:
        raise VerificationError(f"H^2 != {k}I for phi0({k})")
    if not cycles_ok:
        raise VerificationError(f"phi0({k}) has a 4-cycle that is not all-arc-odd")
    if e is not None and abs(e - expected) > 1e-9 * n:
        raise VerificationError(f"energy of phi0({k}) is {e!r}, expected {expected!r}")
    return report


def reduce_to_phi0(o: HypercubeOrientation | MixedGraph) -> SwitchingFunction:
    """``theta`` with ``apply_switching(o, theta) == phi0(k)`` for an optimum orientation ``o``."""
    if isinstance(o, MixedGraph):
        o = HypercubeOrientation.from_mixed(o)
    if not is_optimum_orientation(o):
        raise ValueError("orientation is not optimum; some 4-cycle is not all-arc-odd")
    w = switching_equivalent(o.mixed, phi0(o.k).mixed)
    if w is None:
        # uniqueness up to switching says this cannot happen
        raise RuntimeError(
            f"optimum orientation of Q{o.k} is not switching equivalent to phi0; this is a defect"
        )
    return w.theta


def closed_form_direction(v: int, j: int) -> EdgeState:
    """State of edge ``(v, v | 2**j)`` in phi0 for ``v`` with bit ``j`` clear.

    The arc points up exactly when an even number of bits above ``j`` are set.
    """
    return EdgeState.FORWARD if bin(v >> (j + 1)).count("1") % 2 == 0 else EdgeState.BACKWARD
