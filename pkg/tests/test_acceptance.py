"""Acceptance suite.

Each test carries a ``criterion`` marker; conftest prints one PASS/FAIL line
per criterion at the end of the run.
"""

import math
import time

import numpy as np
import pytest

from gainlap.eigen import eigenvalues, jacobi_eigh, multiplicity, spectra_equal
from gainlap.fuzz import FuzzConfig, random_trial, trial_rng
from gainlap.graph import build, is_balanced, is_bipartite, switching_equivalent, underlying
from gainlap.graphfile import parse, write
from gainlap.matrices import adjacency, norm_adjacency, norm_laplacian
from gainlap.subgraphs import (
    adjacency_coeffs,
    basis_convert,
    charpoly_oracle,
    det_adjacency,
    norm_lap_b_coeffs,
    norm_lap_c_coeffs,
    roots,
)
from gainlap.theorems import (
    FAIL,
    conjecture_search,
    delete_edges,
    interlace_check,
    multi_edge_interlace,
    run_fuzz,
    theorem_suite,
)

from conftest import SQ2, k3, random_hermitian

S3 = math.sqrt(3) / 2


@pytest.mark.criterion(1, "NL(K3, gains -1) = {0.5, 0.5, 2}; not bipartite, not balanced, 2 is an eigenvalue")
def test_triangle_negative_spectrum(record_property):
    t0 = time.perf_counter()
    g = k3(-1)
    s = eigenvalues(norm_laplacian(g))
    err = float(np.max(np.abs(s.values - [0.5, 0.5, 2])))
    report = theorem_suite(g)
    elapsed = time.perf_counter() - t0
    record_property("detail", f"max err {err:.1e}, {elapsed:.2f} s")
    assert err <= 1e-9
    assert not is_bipartite(g)[0] and not is_balanced(g)[0]
    assert multiplicity(s, 2.0, 1e-9) == 1
    assert report.ok
    assert elapsed < 1.0


@pytest.mark.criterion(2, "NL(K3, gains i) = {1 - sqrt3/2, 1, 1 + sqrt3/2}; symmetric about 1, not bipartite")
def test_triangle_i_spectrum(record_property):
    t0 = time.perf_counter()
    g = k3(1j)
    s = eigenvalues(norm_laplacian(g))
    err = float(np.max(np.abs(s.values - [1 - S3, 1, 1 + S3])))
    rec = theorem_suite(g)["symmetry_converse_record"]
    elapsed = time.perf_counter() - t0
    record_property("detail", f"max err {err:.1e}, {elapsed:.2f} s")
    assert err <= 1e-9
    assert rec.details["symmetric_about_one"] and not rec.details["bipartite"]
    assert rec.details["converse_fails_here"]
    assert elapsed < 1.0


@pytest.mark.criterion(3, "cospectral adjacency pair that is not switching equivalent")
def test_cospectral_pair(record_property):
    t0 = time.perf_counter()
    w = complex(SQ2, SQ2)
    phi1 = build(3, [(0, 1, 1j), (0, 2, w), (1, 2, -1j)])
    phi2 = build(3, [(0, 1, -w), (0, 2, 1j), (1, 2, -1j)])
    s1, s2 = eigenvalues(adjacency(phi1)), eigenvalues(adjacency(phi2))
    gap = float(np.max(np.abs(s1.values - s2.values)))
    equivalent = switching_equivalent(phi1, phi2)
    elapsed = time.perf_counter() - t0
    record_property("detail", f"spectral gap {gap:.1e}, {elapsed:.2f} s")
    assert spectra_equal(s1, s2, 1e-8)
    assert not equivalent
    assert elapsed < 1.0


@pytest.mark.criterion(4, "a_k, b_k, converted c_k and det A from subgraph sums match Faddeev-LeVerrier (200 graphs)")
def test_formulas_vs_oracle(record_property):
    t0 = time.perf_counter()
    worst = 0.0
    modes = set()
    for mode in ("all_one", "signs", "fourth_roots", "uniform_circle"):
        cfg = FuzzConfig(n_range=(3, 8), gain_mode=mode, trials=50, seed=2024, connected=True)
        for trial in range(cfg.trials):
            g = random_trial(cfg, trial)
            modes.add(mode)
            a_or = charpoly_oracle(adjacency(g)).coeffs
            l_or = charpoly_oracle(norm_laplacian(g)).coeffs
            devs = [
                np.max(np.abs(adjacency_coeffs(g).coeffs - a_or)),
                np.max(np.abs(norm_lap_b_coeffs(g).coeffs - l_or)),
                np.max(np.abs(basis_convert(norm_lap_c_coeffs(g)).coeffs - l_or)),
                abs(det_adjacency(g) - (-1) ** g.n * a_or[-1]),
            ]
            worst = max(worst, *map(float, devs))
    elapsed = time.perf_counter() - t0
    record_property("detail", f"max deviation {worst:.1e}, {elapsed:.1f} s")
    assert len(modes) == 4
    assert worst <= 1e-8
    assert elapsed < 60


@pytest.mark.criterion(5, "theorem suite on 1000 random connected graphs, n <= 10: zero failures")
def test_theorem_fuzz(record_property):
    t0 = time.perf_counter()
    cfg = FuzzConfig(n_range=(2, 10), gain_mode="mixed", trials=1000, seed=5, connected=True)
    summary = run_fuzz(cfg, n_vectors=10, interlace=False)
    elapsed = time.perf_counter() - t0
    passes = sum(c["pass"] for c in summary.counts.values())
    record_property("detail", f"{passes} check passes, {len(summary.failures)} failures, {elapsed:.0f} s")
    for cid in ("eigenvalues_in_0_2", "trace_equals_n", "lambda2_upper_bound", "extremes_straddle_one",
                "singular_iff_balanced", "zero_simple_when_singular", "negation_reflects_spectrum",
                "bipartite_symmetric_spectrum", "spectrum_matches_underlying_iff_balanced",
                "laplacian_quadratic_form", "norm_laplacian_quadratic_form"):
        assert summary.counts[cid][FAIL] == 0, cid
        assert summary.counts[cid]["pass"] > 0, cid
    assert summary.ok, summary.failures[:3]
    assert elapsed < 300


def _pendant_edge(g, rng):
    leaves = [(u, v) for u, v, _ in g.edges if g.degrees[u] == 1 or g.degrees[v] == 1]
    return leaves[int(rng.integers(len(leaves)))] if leaves else None


@pytest.mark.criterion(6, "edge-deletion interlacing: 500 single deletions, 100 two/three-edge deletions")
def test_interlacing_fuzz(record_property):
    t0 = time.perf_counter()
    single_fail = isolating = 0
    for trial in range(500):
        p = 0.25 if trial % 2 else 0.6
        cfg = FuzzConfig(n_range=(2, 10), edge_probability=p, gain_mode="mixed", trials=500, seed=6,
                         connected=True)
        g = random_trial(cfg, trial)
        rng = trial_rng(cfg, trial + 10_000)
        edge = _pendant_edge(g, rng) if trial % 5 == 0 else None
        if edge is None:
            u, v, _ = g.edges[int(rng.integers(g.m))]
            edge = (u, v)
        h = delete_edges(g, [edge])
        isolating += min(h.degrees) == 0
        single_fail += not interlace_check(g, edge).passed

    multi_fail = multi_done = 0
    trial = 0
    while multi_done < 100:
        cfg = FuzzConfig(n_range=(4, 10), gain_mode="mixed", trials=1, seed=66, connected=True)
        g = random_trial(cfg, trial)
        trial += 1
        t = 2 + multi_done % 2
        if g.m < t:
            continue
        rng = trial_rng(cfg, trial + 10_000)
        picks = rng.choice(g.m, size=t, replace=False)
        h = delete_edges(g, [g.edges[i][:2] for i in picks])
        multi_fail += not multi_edge_interlace(g, h, t)
        multi_done += 1
    elapsed = time.perf_counter() - t0
    record_property("detail", f"single fails {single_fail} ({isolating} isolating), "
                              f"multi fails {multi_fail}, {elapsed:.1f} s")
    assert isolating > 0
    assert single_fail == 0 and multi_fail == 0
    assert elapsed < 120


@pytest.mark.criterion(7, "Jacobi eigenvalues agree with Faddeev-LeVerrier roots on 100 Hermitian matrices")
def test_oracle_independence(record_property):
    rng = np.random.default_rng(7)
    worst = 0.0
    for i in range(100):
        n = 1 + i % 6
        m = random_hermitian(rng, n)
        vals, _, _ = jacobi_eigh(m)
        worst = max(worst, float(np.max(np.abs(np.sort(vals) - roots(charpoly_oracle(m))))))
    record_property("detail", f"max deviation {worst:.1e}")
    assert worst <= 1e-7


@pytest.mark.criterion(8, "radius-coincidence search: non-bipartite hits archived, bipartite hits forbidden")
def test_conjecture_campaign(record_property, tmp_path):
    t0 = time.perf_counter()
    base = dict(n_range=(3, 8), gain_mode="fourth_roots", trials=10_000, seed=8, connected=True)
    open_run = conjecture_search(FuzzConfig(**base), tol=1e-7)
    archive = tmp_path / "hits"
    archive.mkdir()
    for i, g in enumerate(open_run.hits):
        write(g, archive / f"hit_{i}.txt", comment="rho(NL(Phi)) == rho(NL(G)) with Phi unbalanced")
    # every archived hit re-checked with numpy, independent of the in-house solver
    confirmed = 0
    for path in sorted(archive.iterdir()):
        g = parse(path)
        rho = np.max(np.abs(np.linalg.eigvalsh(norm_laplacian(g))))
        rho_g = np.max(np.abs(np.linalg.eigvalsh(norm_laplacian(underlying(g)))))
        confirmed += abs(rho - rho_g) < 1e-7 and not is_balanced(g)[0] and not is_bipartite(g)[0]

    bip_run = conjecture_search(FuzzConfig(**base, bipartite=True), tol=1e-7)
    elapsed = time.perf_counter() - t0
    record_property("detail", f"non-bipartite: {open_run.examined} examined, {len(open_run.hits)} hits "
                              f"({confirmed} confirmed by numpy); bipartite: {bip_run.examined} examined, "
                              f"{len(bip_run.hits)} hits, nearest gap {bip_run.nearest_gap:.2e}; {elapsed:.0f} s")
    assert open_run.examined == 10_000
    assert confirmed == len(open_run.hits)
    assert bip_run.examined == 10_000
    assert not bip_run.hits
    # radius domination of the normalized adjacency also holds on every archived hit
    for path in archive.iterdir():
        g = parse(path)
        assert np.max(np.abs(eigenvalues(norm_adjacency(g)).values)) <= 1 + 1e-9
