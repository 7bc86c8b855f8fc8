"""Floating-point spectra of Hermitian-adjacency matrices.

A Hermitian ``H = A + iB`` is diagonalized through the real symmetric
embedding ``[[A, -B], [B, A]]``, whose spectrum is that of ``H`` with every
multiplicity doubled. The embedding is diagonalized by cyclic Jacobi rotations
in round-robin order: each round rotates ``m/2`` disjoint index pairs at once,
which vectorizes over the pairs and over a batch of matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, SpectrumError
from .hermitian import GaussianMatrix, build_hermitian, skew_matrix
from .mixed import MixedGraph

DEFAULT_TOL = 1e-10
ENERGY_TOL = 1e-9
MAX_SWEEPS = 60


@lru_cache(maxsize=None)
def _round_robin(m: int) -> tuple[np.ndarray, ...]:
    """Circle-method schedule for even ``m``: ``m - 1`` rounds, each a layout
    listing ``m/2`` disjoint pairs as adjacent positions ``(2i, 2i + 1)``."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        layout = []
        for i in range(m // 2):
            p, q = players[i], players[m - 1 - i]
            layout += [min(p, q), max(p, q)]
        rounds.append(np.array(layout, dtype=np.intp))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def off_norm(a: np.ndarray) -> np.ndarray:
    """Frobenius norm of the off-diagonal part, per matrix in the batch."""
    off = np.array(a, dtype=np.float64)
    idx = np.arange(off.shape[-1])
    off[..., idx, idx] = 0.0
    return np.sqrt((off * off).sum(axis=(-2, -1)))


def _rotate_pairs(a: np.ndarray) -> None:
    """One parallel Jacobi step on pairs ``(2i, 2i + 1)``, in place; ``a`` has shape ``(B, m, m)``."""
    nb, m, _ = a.shape
    ev = np.arange(0, m, 2)
    app = a[:, ev, ev]
    aqq = a[:, ev + 1, ev + 1]
    apq = a[:, ev, ev + 1]
    active = np.abs(apq) > np.finfo(np.float64).tiny
    theta = (aqq - app) / (2.0 * np.where(active, apq, 1.0))
    # for huge theta, t ~ 1/(2 theta) and theta**2 would overflow
    big = np.abs(theta) > 1e150
    safe = np.where(big, 0.0, theta)
    t = np.where(
        big,
        0.5 / np.where(big, theta, 1.0),
        np.copysign(1.0, safe) / (np.abs(safe) + np.sqrt(safe * safe + 1.0)),
    )
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    rows = a.reshape(nb, m // 2, 2, m)
    x, y = rows[:, :, 0, :], rows[:, :, 1, :]
    cc, ss = c[:, :, None], s[:, :, None]
    xp = x.copy()
    x *= cc
    x -= ss * y
    y *= cc
    y += ss * xp

    cols = a.reshape(nb, m, m // 2, 2)
    x, y = cols[..., 0], cols[..., 1]
    cc, ss = c[:, None, :], s[:, None, :]
    xp = x.copy()
    x *= cc
    x -= ss * y
    y *= cc
    y += ss * xp


def jacobi_eigenvalues(
    a: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> np.ndarray:
    """Eigenvalues of real symmetric matrices, shape ``(..., m, m)`` -> ``(..., m)``, ascending.

    Sweeps continue until every matrix in the batch has off-diagonal norm
    below ``tol``; running out of sweeps raises ConvergenceError.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    if not np.allclose(a, np.swapaxes(a, -1, -2), rtol=0, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    batch_shape, m = a.shape[:-2], a.shape[-1]
    a = a.reshape((-1, m, m))
    if m % 2:
        # a zero row/column never rotates (its a_pq is 0) and is dropped at the end
        a = np.pad(a, ((0, 0), (0, 1), (0, 1)))
    size = a.shape[-1]
    layout = np.arange(size)

    for _ in range(max_sweeps):
        if off_norm(a).max(initial=0.0) < tol:
            break
        for order in _round_robin(size):
            pos = np.empty(size, dtype=np.intp)
            pos[layout] = np.arange(size)
            idx = pos[order]
            a = np.take(np.take(a, idx, axis=1), idx, axis=2)
            layout = order
            _rotate_pairs(a)
    else:
        worst = float(off_norm(a).max())
        raise ConvergenceError(
            f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {worst:.3e} >= {tol:.1e})"
        )
    diag = np.diagonal(a, axis1=-2, axis2=-1)
    if m % 2:
        diag = diag[:, layout != m]
    eig = np.sort(diag, axis=-1)
    return eig.reshape(batch_shape + (m,))


def real_embedding(h: GaussianMatrix) -> np.ndarray:
    a = h.re.astype(np.float64)
    b = h.im.astype(np.float64)
    return np.block([[a, -b], [b, a]])


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def energy(self) -> float:
        return math.fsum(abs(x) for x in self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues)


def _unpair(doubled: np.ndarray, tol: float) -> np.ndarray:
    # adjacent values of the sorted embedded spectrum come in equal pairs
    lo, hi = doubled[0::2], doubled[1::2]
    gap = np.abs(hi - lo)
    if gap.size and gap.max() >= 10 * tol:
        j = int(gap.argmax())
        raise SpectrumError(
            f"embedded eigenvalues {lo[j]!r} and {hi[j]!r} do not pair within {10 * tol:.1e}"
        )
    return (lo + hi) / 2


def _check_moments(eig: np.ndarray, trace_sq: int, tol: float) -> None:
    n = eig.size
    slack = 10 * tol * max(n, 1) * (1.0 + float(np.abs(eig).max(initial=0.0)))
    if abs(math.fsum(eig)) > slack:
        raise SpectrumError(f"eigenvalue sum {math.fsum(eig)!r} is not 0 = trace(H)")
    if abs(math.fsum(eig * eig) - trace_sq) > slack:
        raise SpectrumError(f"sum of squares {math.fsum(eig * eig)!r} is not trace(H^2) = {trace_sq}")


def _trace_square(h: GaussianMatrix) -> int:
    return int((h.re * h.re + h.im * h.im).sum())


def eigenvalues(h: GaussianMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    if h.n == 0:
        return Spectrum((), tol)
    doubled = jacobi_eigenvalues(real_embedding(h), tol)
    eig = _unpair(doubled, tol)
    _check_moments(eig, _trace_square(h), tol)
    return Spectrum(tuple(float(x) for x in eig), tol)


def eigenvalues_many(hs: Sequence[GaussianMatrix], tol: float = DEFAULT_TOL) -> list[Spectrum]:
    """Batched ``eigenvalues`` for matrices of equal size (one Jacobi run for all)."""
    if not hs:
        return []
    n = hs[0].n
    if any(h.n != n for h in hs):
        raise ValueError("batched eigenvalues need matrices of equal size")
    if n == 0:
        return [Spectrum((), tol) for _ in hs]
    doubled = jacobi_eigenvalues(np.stack([real_embedding(h) for h in hs]), tol)
    out = []
    for h, row in zip(hs, doubled):
        eig = _unpair(row, tol)
        _check_moments(eig, _trace_square(h), tol)
        out.append(Spectrum(tuple(float(x) for x in eig), tol))
    return out


def hermitian_energy(m: MixedGraph, tol: float = DEFAULT_TOL) -> float:
    return eigenvalues(build_hermitian(m), tol).energy


def energy_bound(m: MixedGraph) -> float:
    """``n * sqrt(Delta)``."""
    return m.n * math.sqrt(m.underlying.max_degree)


def energy_bound_gap(m: MixedGraph, tol: float = DEFAULT_TOL) -> float:
    return energy_bound(m) - hermitian_energy(m, tol)


def energy_bound_gaps(ms: Sequence[MixedGraph], tol: float = DEFAULT_TOL) -> list[float]:
    specs = eigenvalues_many([build_hermitian(m) for m in ms], tol)
    return [energy_bound(m) - s.energy for m, s in zip(ms, specs)]


def skew_energy(s: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """Sum of singular values of a real matrix via the symmetric dilation ``[[0, S], [S^T, 0]]``."""
    s = np.asarray(s, dtype=np.float64)
    n = s.shape[0]
    if n == 0:
        return 0.0
    z = np.zeros_like(s)
    eig = jacobi_eigenvalues(np.block([[z, s], [s.T, z]]), tol)
    # the dilation has eigenvalues +-sigma_j
    return math.fsum(abs(x) for x in eig) / 2


def skew_energy_equals_hermitian(
    m: MixedGraph, tol: float = ENERGY_TOL, solver_tol: float = DEFAULT_TOL
) -> bool:
    es = skew_energy(skew_matrix(m), solver_tol)
    eh = hermitian_energy(m, solver_tol)
    return abs(es - eh) <= tol
