import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gainlap.eigen import (
    Spectrum,
    eigenvalues,
    is_symmetric_about_one,
    jacobi_eigh,
    max_eig,
    min_eig,
    multiplicity,
    residuals,
    spectra_equal,
    spectral_radius,
)
from gainlap.errors import LengthMismatchError, NoConvergenceError, NotHermitianError
from gainlap.fuzz import FuzzConfig, random_gain_graph
from gainlap.graph import apply_switching, build, is_balanced, negate, underlying, unit
from gainlap.matrices import adjacency, laplacian, norm_adjacency, norm_laplacian

from conftest import complete_graph, gain_graphs, k3, random_hermitian

S3 = math.sqrt(3) / 2


def test_diagonal():
    assert np.allclose(eigenvalues(np.diag([3.0, 1.0, 2.0])).values, [1, 2, 3])


def test_golden_triangles():
    assert np.allclose(eigenvalues(norm_laplacian(k3(1j))).values, [1 - S3, 1, 1 + S3], atol=1e-9)
    s = eigenvalues(norm_laplacian(k3(-1)))
    assert np.allclose(s.values, [0.5, 0.5, 2], atol=1e-9)
    assert multiplicity(s, 0.5) == 2


def test_trivial_sizes():
    assert len(eigenvalues(np.zeros((0, 0)))) == 0
    assert eigenvalues(np.array([[2.5]])).values.tolist() == [2.5]
    vals, vecs, sweeps = jacobi_eigh(np.array([[4.0]]))
    assert vals.tolist() == [4.0] and sweeps == 0


def test_spectral_radius_examples():
    assert spectral_radius(np.zeros((3, 3))) == 0
    for g in (complete_graph(4), build(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]), k3(1)):
        assert spectral_radius(norm_laplacian(negate(underlying(g)))) == pytest.approx(2, abs=1e-9)


def test_spectrum_helpers():
    a = Spectrum([2.0, 0.0])
    assert a.values.tolist() == [0, 2]
    assert spectra_equal(a, Spectrum([0, 2]), 1e-8)
    assert not spectra_equal(a, Spectrum([0, 1.9]))
    with pytest.raises(LengthMismatchError):
        spectra_equal(a, Spectrum([0, 1, 2]))
    assert min_eig(a) == 0 and max_eig(a) == 2
    assert is_symmetric_about_one(a)
    assert a.reflected().values.tolist() == [0, 2]
    with pytest.raises(ValueError):
        a.values[0] = 1


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        eigenvalues(np.array([[1, 2], [0, 1]]))


def test_no_convergence_is_reported():
    m = random_hermitian(np.random.default_rng(0), 6)
    with pytest.raises(NoConvergenceError):
        jacobi_eigh(m, max_sweeps=1)


@settings(max_examples=60)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_jacobi_matches_numpy_and_has_small_residuals(n, seed):
    m = random_hermitian(np.random.default_rng(seed), n)
    vals, vecs, _ = jacobi_eigh(m)
    assert np.allclose(np.sort(vals), np.linalg.eigvalsh(m), atol=1e-10)
    assert np.max(residuals(m, vals, vecs)) <= 1e-9 * np.linalg.norm(m)
    assert np.allclose(vecs.conj().T @ vecs, np.eye(n), atol=1e-10)


def test_repeated_eigenvalues():
    q, _ = np.linalg.qr(np.random.default_rng(3).normal(size=(5, 5)) + 1j)
    m = q @ np.diag([1.0, 1.0, 1.0, -2.0, -2.0]) @ q.conj().T
    m = (m + m.conj().T) / 2
    assert np.allclose(eigenvalues(m).values, [-2, -2, 1, 1, 1], atol=1e-10)


@given(gain_graphs(no_isolated=True, min_n=2))
def test_trace_and_radius_domination(g):
    s = eigenvalues(norm_laplacian(g))
    assert abs(s.trace - g.n) <= 1e-9 * g.n
    assert spectral_radius(norm_adjacency(g)) <= spectral_radius(norm_adjacency(underlying(g))) + 1e-9
    assert spectral_radius(adjacency(g)) <= spectral_radius(adjacency(underlying(g))) + 1e-9


@given(gain_graphs(no_isolated=True, min_n=2), st.data())
def test_switching_preserves_four_spectra(g, data):
    angles = data.draw(st.lists(st.floats(0, 6.3), min_size=g.n, max_size=g.n))
    h = apply_switching(g, [unit(t) for t in angles])
    for f in (adjacency, laplacian, norm_adjacency, norm_laplacian):
        assert spectra_equal(eigenvalues(f(g)), eigenvalues(f(h)), 1e-8)


def test_balanced_graphs_have_zero_eigenvalue():
    cfg = FuzzConfig(n_range=(2, 8), gain_mode="all_one", trials=30, seed=4, connected=True)
    for g in random_gain_graph(cfg):
        zeta = [unit(0.7 * v) for v in range(g.n)]
        g = apply_switching(g, zeta)
        assert is_balanced(g)[0]
        assert abs(min_eig(eigenvalues(norm_laplacian(g)))) < 1e-9


@settings(max_examples=30)
@given(gain_graphs(no_isolated=True, min_n=2), st.integers(0, 2**32 - 1))
def test_rayleigh_quotients_inside_extremes(g, seed):
    s = eigenvalues(norm_laplacian(g))
    rng = np.random.default_rng(seed)
    d = np.array(g.degrees, dtype=float)
    for y in rng.normal(size=(200, g.n)) + 1j * rng.normal(size=(200, g.n)):
        num = sum(abs(y[u] - g.gain(u, v) * y[v]) ** 2 for u, v, _ in g.edges)
        q = num / float(np.sum(d * np.abs(y) ** 2))
        assert s[0] - 1e-9 <= q <= s[-1] + 1e-9
