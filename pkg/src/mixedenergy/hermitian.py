"""Exact Hermitian-adjacency matrices over the Gaussian integers.

Nothing here touches floating point. Matrices keep their real and imaginary
parts as two int64 arrays; every product is an integer product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graphs import Graph
from .mixed import EdgeState, MixedGraph


@dataclass(frozen=True, order=True)
class GaussianInt:
    re: int
    im: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", int(self.re))
        object.__setattr__(self, "im", int(self.im))

    @classmethod
    def coerce(cls, x) -> GaussianInt:
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, (int, np.integer)):
            return cls(int(x), 0)
        raise TypeError(f"cannot treat {x!r} as a Gaussian integer")

    def __add__(self, other) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> GaussianInt:
        return GaussianInt.coerce(other) - self

    def __mul__(self, other) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, k: int) -> GaussianInt:
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        try:
            o = GaussianInt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imag = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return imag
        return f"{self.re}{'' if imag.startswith('-') else '+'}{imag}"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)

_ENTRY = {
    EdgeState.UNDIRECTED: (1, 0),
    EdgeState.FORWARD: (0, 1),
    EdgeState.BACKWARD: (0, -1),
}


@dataclass(frozen=True, eq=False)
class GaussianMatrix:
    """Square matrix with Gaussian-integer entries ``re + i*im``."""

    re: np.ndarray
    im: np.ndarray

    def __post_init__(self) -> None:
        re = np.asarray(self.re, dtype=np.int64)
        im = np.asarray(self.im, dtype=np.int64)
        if re.shape != im.shape or re.ndim != 2 or re.shape[0] != re.shape[1]:
            raise ValueError(f"expected two equal square arrays, got {re.shape} and {im.shape}")
        re.flags.writeable = False
        im.flags.writeable = False
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @property
    def n(self) -> int:
        return self.re.shape[0]

    def __getitem__(self, kl: tuple[int, int]) -> GaussianInt:
        k, l = kl
        return GaussianInt(self.re[k, l], self.im[k, l])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im)

    def __hash__(self) -> int:
        return hash((self.re.tobytes(), self.im.tobytes()))

    def rows(self) -> list[list[GaussianInt]]:
        return [[self[k, l] for l in range(self.n)] for k in range(self.n)]

    def to_complex(self) -> np.ndarray:
        return self.re + 1j * self.im

    def is_scalar(self, c: int) -> bool:
        """True iff the matrix equals ``c * I`` exactly."""
        eye = np.eye(self.n, dtype=np.int64)
        return np.array_equal(self.re, c * eye) and not self.im.any()

    @classmethod
    def scalar(cls, n: int, c: int) -> GaussianMatrix:
        return cls(c * np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64))

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.rows()]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


class HermitianMatrix(GaussianMatrix):
    """Hermitian-adjacency matrix: zero diagonal, entries in {0, 1, i, -i}, ``H = H*``."""

    def __post_init__(self) -> None:
        super().__post_init__()
        re, im = self.re, self.im
        if not (np.array_equal(re, re.T) and np.array_equal(im, -im.T)):
            raise ValueError("matrix is not conjugate-symmetric")
        if np.diagonal(re).any() or np.diagonal(im).any():
            raise ValueError("diagonal must be zero")
        allowed = ((re == 0) & (im == 0)) | ((re == 1) & (im == 0)) | ((re == 0) & (np.abs(im) == 1))
        if not allowed.all():
            raise ValueError("entries must lie in {0, 1, i, -i}")


def build_hermitian(m: MixedGraph) -> HermitianMatrix:
    n = m.n
    re = np.zeros((n, n), dtype=np.int64)
    im = np.zeros((n, n), dtype=np.int64)
    for (u, v), s in zip(m.underlying.edges, m.states):
        a, b = _ENTRY[s]
        re[u, v] = re[v, u] = a
        im[u, v], im[v, u] = b, -b
    return HermitianMatrix(re, im)


SPARSE_ABOVE = 64


def hermitian_square(h: GaussianMatrix) -> GaussianMatrix:
    """Exact ``H @ H`` as ``(A^2 - B^2) + i(AB + BA)`` for ``H = A + iB``."""
    if h.n > SPARSE_ABOVE:
        a = sp.csr_array(h.re)
        b = sp.csr_array(h.im)
        re = (a @ a - b @ b).toarray()
        im = (a @ b + b @ a).toarray()
    else:
        a, b = h.re, h.im
        re = a @ a - b @ b
        im = a @ b + b @ a
    return GaussianMatrix(re, im)


def row_inner_product(h: GaussianMatrix, u: int, v: int) -> GaussianInt:
    """``(H @ H)[u, v]``, i.e. row ``u`` of ``H`` dotted with column ``v``."""
    total = ZERO
    for w in range(h.n):
        total = total + h[u, w] * h[w, v]
    return total


def is_optimum(m: MixedGraph) -> bool:
    """Exact test of ``H^2 == Delta * I`` with ``Delta`` the maximum degree."""
    delta = m.underlying.max_degree
    return hermitian_square(build_hermitian(m)).is_scalar(delta)


def skew_matrix(m: MixedGraph) -> np.ndarray:
    """Real antisymmetric ``S = -i H``; defined for oriented graphs only."""
    if not m.is_oriented():
        bad = m.undirected_edges()[0]
        raise ValueError(f"skew matrix needs an oriented graph; edge {bad} is undirected")
    h = build_hermitian(m)
    # -i * (i * im) = im
    return np.array(h.im, dtype=np.int64)


def even_common_neighbors(g: Graph) -> bool:
    """Every pair at distance 1 or 2 has an even number of common neighbors."""
    return all(len(common) % 2 == 0 for _, _, common in g.close_pairs())
