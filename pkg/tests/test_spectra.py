from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import to_assignment
from mixedenergy.errors import ConvergenceError
from mixedenergy.graphs import Graph, complete_graph, hypercube
from mixedenergy.hermitian import build_hermitian, skew_matrix
from mixedenergy.hypercube import phi0
from mixedenergy.mixed import fixture, orient_all, undirect_all
from mixedenergy.spectra import (
    eigenvalues,
    eigenvalues_many,
    energy_bound,
    energy_bound_gap,
    energy_bound_gaps,
    hermitian_energy,
    jacobi_eigenvalues,
    real_embedding,
    skew_energy,
    skew_energy_equals_hermitian,
)
from strategies import mixed_graphs

TOL = 1e-9


def test_q1_spectrum():
    spec = eigenvalues(build_hermitian(orient_all(complete_graph(2))))
    assert np.allclose(spec.eigenvalues, [-1, 1], atol=TOL)
    assert abs(hermitian_energy(orient_all(complete_graph(2))) - 2.0) < TOL


def test_undirected_k4_spectrum():
    k4 = undirect_all(complete_graph(4))
    assert np.allclose(eigenvalues(build_hermitian(k4)).eigenvalues, [-1, -1, -1, 3], atol=TOL)
    assert abs(hermitian_energy(k4) - 6.0) < TOL
    assert abs(energy_bound_gap(k4) - (4 * math.sqrt(3) - 6)) < TOL


def test_h1_spectrum():
    spec = eigenvalues(build_hermitian(fixture("H1"))).as_array()
    r3 = math.sqrt(3)
    assert np.allclose(spec, [-r3] * 4 + [r3] * 4, atol=TOL)
    assert abs(energy_bound_gap(fixture("H1"))) < TOL


def test_g1_energy():
    assert abs(hermitian_energy(fixture("G1")) - 4 * math.sqrt(3)) < TOL


def test_single_vertex_and_empty():
    m = undirect_all(Graph(1))
    assert energy_bound(m) == 0.0
    assert abs(energy_bound_gap(m)) < TOL
    assert eigenvalues(build_hermitian(undirect_all(Graph(0)))).eigenvalues == ()


def test_real_embedding_shape():
    h = build_hermitian(orient_all(complete_graph(2)))
    e = real_embedding(h)
    assert e.shape == (4, 4) and np.allclose(e, e.T)


@pytest.mark.parametrize("m", [1, 2, 3, 7, 16, 33])
def test_jacobi_matches_lapack(m):
    rng = np.random.default_rng(m)
    a = rng.normal(size=(m, m))
    a = a + a.T
    assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-9)


def test_jacobi_batched():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(5, 9, 9))
    a = a + np.swapaxes(a, 1, 2)
    got = jacobi_eigenvalues(a)
    assert got.shape == (5, 9)
    for x, y in zip(got, a):
        assert np.allclose(x, np.linalg.eigvalsh(y), atol=1e-9)


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        jacobi_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_jacobi_reports_nonconvergence():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(12, 12))
    with pytest.raises(ConvergenceError):
        jacobi_eigenvalues(a + a.T, tol=1e-30, max_sweeps=1)


def test_eigenvalues_many_matches_single():
    ms = [fixture(n) for n in ("H1", "H3", "H4", "H5", "H6")] + [undirect_all(hypercube(3))]
    batch = eigenvalues_many([build_hermitian(m) for m in ms])
    for m, s in zip(ms, batch):
        assert np.allclose(s.eigenvalues, eigenvalues(build_hermitian(m)).eigenvalues, atol=TOL)
    gaps = energy_bound_gaps(ms)
    assert all(abs(g) < TOL for g in gaps[:5]) and gaps[5] > 0.1
    with pytest.raises(ValueError):
        eigenvalues_many([build_hermitian(ms[0]), build_hermitian(fixture("G1"))])
    assert eigenvalues_many([]) == []


def test_skew_energy_examples():
    assert skew_energy_equals_hermitian(orient_all(complete_graph(2)))
    assert abs(skew_energy(skew_matrix(orient_all(complete_graph(2)))) - 2.0) < TOL
    assert skew_energy_equals_hermitian(phi0(3).mixed)
    with pytest.raises(ValueError):
        skew_energy_equals_hermitian(undirect_all(complete_graph(2)))


@settings(max_examples=100, deadline=None)
@given(mixed_graphs(oriented=True))
def test_skew_energy_equals_hermitian_random(m):
    assert skew_energy_equals_hermitian(m)


@settings(max_examples=150, deadline=None)
@given(mixed_graphs())
def test_spectrum_matches_lapack_and_bound(m):
    spec = eigenvalues(build_hermitian(m)).as_array()
    ref = oracles.spectrum(m.n, to_assignment(m)) if m.n else np.array([])
    assert np.allclose(spec, ref, atol=TOL)
    assert hermitian_energy(m) <= energy_bound(m) + TOL


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_jacobi_random_symmetric(m, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(m, m))
    a = a + a.T
    assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-9)
