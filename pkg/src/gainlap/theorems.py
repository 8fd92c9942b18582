"""Numerical checks of the spectral facts about normalized gain Laplacians.

Every check returns a :class:`CheckResult` with status ``pass``, ``fail`` or
``hypothesis_not_met``; nothing here raises on a failed check. Strict
inequalities use a guard band, and values that land inside it are reported
as ``hypothesis_not_met`` with ``inconclusive=True`` in the details.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import eigen
from .eigen import Spectrum, eigenvalues, spectra_equal, spectral_radius
from .errors import EdgeNotPresentError, NotSubgraphError
from .fuzz import FuzzConfig, random_trial, trial_rng
from .graph import (
    GainGraph,
    apply_switching,
    build,
    cycle_gain,
    is_balanced,
    is_bipartite,
    is_connected,
    negate,
    switching_equivalent,
    underlying,
)
from .matrices import adjacency, laplacian, norm_adjacency, norm_laplacian, quadratic_form

PASS = "pass"
FAIL = "fail"
NOT_MET = "hypothesis_not_met"

EIG_TOL = 1e-9
SPEC_TOL = 1e-8
SINGULAR_TOL = 1e-8
GUARD = 1e-9
FORM_REL_TOL = 1e-9

CHECK_IDS = (
    "balance_witness",
    "bipartite_balance_link",
    "switching_invariance",
    "bipartite_iff_normadj_spectrum_symmetric",
    "radius_domination",
    "laplacian_quadratic_form",
    "norm_laplacian_quadratic_form",
    "rayleigh_bounds",
    "eigenvalues_in_0_2",
    "trace_equals_n",
    "lambda2_upper_bound",
    "lambdan_lower_bound_if_balanced",
    "complete_balanced_equality",
    "extremes_straddle_one",
    "spectrum_matches_underlying_iff_balanced",
    "singular_iff_balanced",
    "zero_simple_when_singular",
    "negation_reflects_spectrum",
    "negation_equal_iff_symmetric",
    "radius_two_iff_balanced",
    "bipartite_radius_implies_spectrum",
    "bipartite_eigenvalue_two",
    "bipartite_radius_equivalences",
    "bipartite_symmetric_spectrum",
    "symmetry_converse_record",
)


@dataclass
class CheckResult:
    check_id: str
    status: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check_id": self.check_id, "status": self.status, "details": _jsonable(self.details)}


@dataclass
class VerificationReport:
    graph_summary: str
    checks: list[CheckResult]

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __getitem__(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self) -> dict:
        return {"graph": self.graph_summary, "checks": [c.to_dict() for c in self.checks]}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating, float)):
        return float(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# -- interlacing -------------------------------------------------------------


@dataclass
class InterlaceResult:
    passed: bool
    lam: Spectrum
    theta: Spectrum

    def __iter__(self):
        return iter((self.passed, self.lam, self.theta))


def delete_edges(g: GainGraph, edges) -> GainGraph:
    drop = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if not g.has_edge(*key):
            raise EdgeNotPresentError(f"({u}, {v}) is not an edge")
        drop.add(key)
    return GainGraph(g.n, tuple(e for e in g.edges if (e[0], e[1]) not in drop))


def padded_norm_spectrum(g: GainGraph) -> Spectrum:
    """Spectrum of the normalized Laplacian of the non-isolated part, padded with zeros."""
    keep = [v for v in range(g.n) if g.degrees[v] > 0]
    if not keep:
        return Spectrum(np.zeros(g.n))
    index = {v: i for i, v in enumerate(keep)}
    sub = build(len(keep), [(index[u], index[v], z) for u, v, z in g.edges])
    vals = eigenvalues(norm_laplacian(sub)).values
    return Spectrum(np.concatenate([np.zeros(g.n - len(keep)), vals]))


def _interlaces(lam: np.ndarray, theta: np.ndarray, t: int, tol: float) -> bool:
    n = len(lam)
    ext = np.concatenate([np.zeros(t), lam, np.full(t, 2.0)])
    # 1-based: ext[k-1] is lambda_{k-t} and ext[k-1+2t] is lambda_{k+t}
    lower = ext[:n]
    upper = ext[2 * t: 2 * t + n]
    return bool(np.all(lower <= theta + tol) and np.all(theta <= upper + tol))


def interlace_check(g: GainGraph, edge, tol: float = EIG_TOL) -> InterlaceResult:
    """Compare the spectra before and after deleting one edge.

    Passes iff lambda_{i-1} <= theta_i <= lambda_{i+1} for every i, with
    lambda_0 = 0 and lambda_{n+1} = 2. Vertices left isolated by the deletion
    contribute zero eigenvalues.
    """
    h = delete_edges(g, [edge])
    lam = padded_norm_spectrum(g)
    theta = padded_norm_spectrum(h)
    return InterlaceResult(_interlaces(lam.values, theta.values, 1, tol), lam, theta)


def multi_edge_interlace(g: GainGraph, h: GainGraph, t: int | None = None,
                         tol: float = EIG_TOL) -> bool:
    """lambda_{k-t} <= theta_k <= lambda_{k+t} for a spanning subgraph ``h`` missing <= t edges."""
    if h.n != g.n:
        raise NotSubgraphError("subgraph must span the same vertex set")
    for u, v, z in h.edges:
        if not g.has_edge(u, v) or abs(g.gain(u, v) - z) > 1e-12:
            raise NotSubgraphError(f"edge ({u}, {v}) of h is not an edge of g with the same gain")
    removed = g.m - h.m
    if t is None:
        t = removed
    if removed > t:
        raise NotSubgraphError(f"{removed} edges removed but t={t}")
    lam = padded_norm_spectrum(g).values
    theta = padded_norm_spectrum(h).values
    return _interlaces(lam, theta, t, tol)


# -- the theorem suite -------------------------------------------------------


class _Facts:
    """Lazily computed spectra and structure shared by the checks."""

    def __init__(self, g: GainGraph):
        self.g = g
        self.n = g.n
        self.G = underlying(g)
        self.connected = is_connected(g)
        self.no_isolated = g.n > 0 and min(g.degrees) > 0
        self.bipartite = is_bipartite(g)[0]
        self.balance = is_balanced(g)
        self.balanced = self.balance[0]
        self.neg_balanced = is_balanced(negate(g))[0]
        self._cache: dict[str, Spectrum] = {}

    def spec(self, key: str) -> Spectrum:
        if key not in self._cache:
            g, G = self.g, self.G
            build_fn = {
                "NL": lambda: norm_laplacian(g),
                "NL_G": lambda: norm_laplacian(G),
                "NL_negPhi": lambda: norm_laplacian(negate(g)),
                "NL_negG": lambda: norm_laplacian(negate(G)),
                "NA_G": lambda: norm_adjacency(G),
                "NA_negG": lambda: norm_adjacency(negate(G)),
            }[key]
            self._cache[key] = eigenvalues(build_fn())
        return self._cache[key]

    @property
    def lam(self) -> np.ndarray:
        return self.spec("NL").values

    @property
    def summary(self) -> str:
        return (
            f"n={self.n} m={self.g.m} connected={self.connected} "
            f"bipartite={self.bipartite} balanced={self.balanced}"
        )


def _needs(f: _Facts, connected: bool = True, min_n: int = 2):
    missing = []
    if f.n < min_n:
        missing.append(f"n >= {min_n}")
    if not f.no_isolated:
        missing.append("no isolated vertices")
    if connected and not f.connected:
        missing.append("connected")
    return missing


def _not_met(check_id, missing, **details):
    return CheckResult(check_id, NOT_MET, {"missing": missing, **details})


def _radius(values: np.ndarray) -> float:
    return float(np.max(np.abs(values))) if len(values) else 0.0


def _check_balance_witness(f: _Facts):
    ok, witness = f.balance
    if ok:
        switched = apply_switching(f.g, witness)
        dev = max((abs(z - 1) for _, _, z in switched.edges), default=0.0)
        return CheckResult("balance_witness", _status(dev <= 1e-9),
                           {"balanced": True, "max_switched_deviation": dev})
    gain = cycle_gain(f.g, witness)
    return CheckResult("balance_witness", _status(abs(gain - 1) > 1e-9),
                       {"balanced": False, "cycle": list(witness.vertices), "cycle_gain": gain})


def _check_bipartite_balance_link(f: _Facts):
    if not f.connected:
        return _not_met("bipartite_balance_link", ["connected"])
    # bipartite: balanced implies -Phi balanced; both balanced implies bipartite
    first = not (f.bipartite and f.balanced) or f.neg_balanced
    second = not (f.balanced and f.neg_balanced) or f.bipartite
    return CheckResult("bipartite_balance_link", _status(first and second), {
        "bipartite": f.bipartite, "balanced": f.balanced, "negation_balanced": f.neg_balanced})


def _check_switching_invariance(f: _Facts, rng):
    zeta = np.exp(1j * rng.uniform(0, 2 * np.pi, f.n))
    h = apply_switching(f.g, zeta)
    worst = 0.0
    builders = {
        "A": adjacency,
        "NA": lambda x: norm_adjacency(x, allow_isolated=True),
        "L": laplacian,
        "NL": lambda x: norm_laplacian(x, allow_isolated=True),
    }
    for fn in builders.values():
        a = eigenvalues(fn(f.g)).values
        b = eigenvalues(fn(h)).values
        if len(a):
            worst = max(worst, float(np.max(np.abs(a - b))))
    return CheckResult("switching_invariance", _status(worst <= SPEC_TOL), {"max_deviation": worst})


def _check_bipartite_normadj(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("bipartite_iff_normadj_spectrum_symmetric", missing)
    equal = spectra_equal(f.spec("NA_G"), f.spec("NA_negG"), SPEC_TOL)
    return CheckResult("bipartite_iff_normadj_spectrum_symmetric", _status(equal == f.bipartite),
                       {"spectra_equal": equal, "bipartite": f.bipartite})


def _check_radius_domination(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("radius_domination", missing)
    a = adjacency(f.g)
    na = norm_adjacency(f.g)
    nl = norm_laplacian(f.g)
    r = {
        "A": spectral_radius(a), "abs_A": spectral_radius(np.abs(a)), "A_G": spectral_radius(adjacency(f.G)),
        "NA": spectral_radius(na), "abs_NA": spectral_radius(np.abs(na)), "NA_G": spectral_radius(norm_adjacency(f.G)),
        "NL": _radius(f.lam), "abs_NL": spectral_radius(np.abs(nl)), "NL_negG": _radius(f.spec("NL_negG").values),
    }
    tol = EIG_TOL
    ok = (
        r["A"] <= r["abs_A"] + tol and abs(r["abs_A"] - r["A_G"]) <= tol
        and r["NA"] <= r["abs_NA"] + tol and abs(r["abs_NA"] - r["NA_G"]) <= tol
        and r["NL"] <= r["abs_NL"] + tol and abs(r["abs_NL"] - r["NL_negG"]) <= tol
        and abs(r["NL_negG"] - 2.0) <= tol
    )
    return CheckResult("radius_domination", _status(ok), r)


def _rel_err(x: float, y: float) -> float:
    return abs(x - y) / max(1.0, abs(x), abs(y))


def _random_vectors(rng, n: int, k: int) -> np.ndarray:
    return rng.normal(size=(k, n)) + 1j * rng.normal(size=(k, n))


def _check_laplacian_form(f: _Facts, xs):
    lap = laplacian(f.g)
    worst = 0.0
    for x in xs:
        direct = sum(abs(x[u] - z * x[v]) ** 2 for u, v, z in f.g.edges)
        worst = max(worst, _rel_err(quadratic_form(lap, x), direct))
    return CheckResult("laplacian_quadratic_form", _status(worst <= FORM_REL_TOL),
                       {"max_rel_error": worst, "vectors": len(xs)})


def _check_norm_laplacian_form(f: _Facts, xs):
    missing = _needs(f, min_n=1)
    if missing:
        return _not_met("norm_laplacian_quadratic_form", missing)
    nl = norm_laplacian(f.g)
    sq = np.sqrt(np.asarray(f.g.degrees, dtype=float))
    worst = 0.0
    for x in xs:
        direct = sum(abs(x[u] / sq[u] - z * x[v] / sq[v]) ** 2 for u, v, z in f.g.edges)
        worst = max(worst, _rel_err(quadratic_form(nl, x), direct))
    return CheckResult("norm_laplacian_quadratic_form", _status(worst <= FORM_REL_TOL),
                       {"max_rel_error": worst, "vectors": len(xs)})


def rayleigh_quotients(g: GainGraph, ys: np.ndarray) -> np.ndarray:
    """sum_{i~j} |y_i - a_ij y_j|^2 / sum_i d_i |y_i|^2 for each row of ``ys``."""
    d = np.asarray(g.degrees, dtype=float)
    num = np.zeros(len(ys))
    for u, v, z in g.edges:
        num += np.abs(ys[:, u] - z * ys[:, v]) ** 2
    den = (np.abs(ys) ** 2) @ d
    return num / den


def _check_rayleigh(f: _Facts, ys):
    missing = _needs(f, min_n=1)
    if missing:
        return _not_met("rayleigh_bounds", missing)
    q = rayleigh_quotients(f.g, ys)
    lo, hi = float(f.lam[0]), float(f.lam[-1])
    ok = bool(np.all(q >= lo - EIG_TOL) and np.all(q <= hi + EIG_TOL))
    return CheckResult("rayleigh_bounds", _status(ok), {
        "lambda_1": lo, "lambda_n": hi, "min_quotient": float(q.min()), "max_quotient": float(q.max()),
        "vectors": len(ys)})


def _check_bounds(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("eigenvalues_in_0_2", missing)
    lo, hi = float(f.lam[0]), float(f.lam[-1])
    return CheckResult("eigenvalues_in_0_2", _status(lo >= -EIG_TOL and hi <= 2 + EIG_TOL),
                       {"min": lo, "max": hi})


def _check_trace(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("trace_equals_n", missing)
    s = float(np.sum(f.lam))
    return CheckResult("trace_equals_n", _status(abs(s - f.n) <= SPEC_TOL * f.n), {"sum": s, "n": f.n})


def _check_lambda2(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("lambda2_upper_bound", missing)
    bound = f.n / (f.n - 1)
    return CheckResult("lambda2_upper_bound", _status(f.lam[1] <= bound + EIG_TOL),
                       {"lambda_2": float(f.lam[1]), "bound": bound})


def _check_lambdan(f: _Facts):
    missing = _needs(f)
    if not f.balanced:
        missing.append("balanced")
    if missing:
        return _not_met("lambdan_lower_bound_if_balanced", missing)
    bound = f.n / (f.n - 1)
    return CheckResult("lambdan_lower_bound_if_balanced", _status(f.lam[-1] >= bound - EIG_TOL),
                       {"lambda_n": float(f.lam[-1]), "bound": bound})


def _check_complete_equality(f: _Facts):
    """Equality in the lambda_2 bound exactly for balanced complete graphs (sampled, both ways)."""
    missing = _needs(f)
    if missing:
        return _not_met("complete_balanced_equality", missing)
    n = f.n
    bound = n / (n - 1)
    complete = f.g.m == n * (n - 1) // 2
    target = f.balanced and complete
    eq2 = abs(f.lam[1] - bound) <= SPEC_TOL
    ok = eq2 == target
    details = {"lambda_2": float(f.lam[1]), "bound": bound, "complete": complete,
               "balanced": f.balanced, "lambda_2_equal": bool(eq2)}
    if f.balanced:
        eqn = abs(f.lam[-1] - bound) <= SPEC_TOL
        ok = ok and eqn == complete
        details["lambda_n_equal"] = bool(eqn)
    return CheckResult("complete_balanced_equality", _status(ok), details)


def _check_straddle(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("extremes_straddle_one", missing)
    lo, hi = float(f.lam[0]), float(f.lam[-1])
    details = {"lambda_1": lo, "lambda_n": hi, "guard": GUARD}
    if lo < 1 - GUARD and hi > 1 + GUARD:
        return CheckResult("extremes_straddle_one", PASS, details)
    if lo > 1 + GUARD or hi < 1 - GUARD:
        return CheckResult("extremes_straddle_one", FAIL, details)
    return CheckResult("extremes_straddle_one", NOT_MET, {**details, "inconclusive": True})


def _check_spec_vs_underlying(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("spectrum_matches_underlying_iff_balanced", missing)
    equal = spectra_equal(f.spec("NL"), f.spec("NL_G"), SPEC_TOL)
    equiv = switching_equivalent(f.g, f.G)
    return CheckResult("spectrum_matches_underlying_iff_balanced", _status(equal == equiv),
                       {"spectra_equal": equal, "switching_equivalent": equiv})


def _check_singular(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("singular_iff_balanced", missing)
    singular = bool(f.lam[0] < SINGULAR_TOL)
    return CheckResult("singular_iff_balanced", _status(singular == f.balanced),
                       {"min_eigenvalue": float(f.lam[0]), "singular": singular, "balanced": f.balanced})


def _check_zero_simple(f: _Facts):
    missing = _needs(f)
    if not missing and f.lam[0] >= SINGULAR_TOL:
        missing.append("singular")
    if missing:
        return _not_met("zero_simple_when_singular", missing)
    mult = eigen.multiplicity(f.spec("NL"), 0.0, SINGULAR_TOL)
    return CheckResult("zero_simple_when_singular", _status(mult == 1), {"multiplicity_of_zero": mult})


def _check_negation(f: _Facts):
    missing = _needs(f, connected=False, min_n=1)
    if missing:
        return _not_met("negation_reflects_spectrum", missing)
    alpha = f.spec("NL_negPhi").values
    dev = float(np.max(np.abs(alpha - (2.0 - f.lam[::-1]))))
    return CheckResult("negation_reflects_spectrum", _status(dev <= EIG_TOL), {"max_deviation": dev})


def _check_negation_symmetric(f: _Facts):
    missing = _needs(f, connected=False, min_n=1)
    if missing:
        return _not_met("negation_equal_iff_symmetric", missing)
    equal = spectra_equal(f.spec("NL"), f.spec("NL_negPhi"), SPEC_TOL)
    sym = eigen.is_symmetric_about_one(f.spec("NL"), SPEC_TOL)
    return CheckResult("negation_equal_iff_symmetric", _status(equal == sym),
                       {"spectra_equal": equal, "symmetric_about_one": sym})


def _check_radius_two(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("radius_two_iff_balanced", missing)
    rho_neg = _radius(f.spec("NL_negPhi").values)
    rho = _radius(f.lam)
    rho_neg_g = _radius(f.spec("NL_negG").values)
    first = (abs(rho_neg - 2.0) <= SPEC_TOL) == f.balanced
    second = (abs(rho - rho_neg_g) <= SPEC_TOL) == f.neg_balanced
    return CheckResult("radius_two_iff_balanced", _status(first and second), {
        "rho_NL_negPhi": rho_neg, "rho_NL": rho, "rho_NL_negG": rho_neg_g,
        "balanced": f.balanced, "negation_balanced": f.neg_balanced})


def _check_bipartite_radius_spectrum(f: _Facts):
    missing = _needs(f)
    if not f.bipartite:
        missing.append("bipartite")
    if missing:
        return _not_met("bipartite_radius_implies_spectrum", missing)
    rho = _radius(f.lam)
    rho_g = _radius(f.spec("NL_G").values)
    coincide = abs(rho - rho_g) <= SPEC_TOL
    equal = spectra_equal(f.spec("NL"), f.spec("NL_G"), SPEC_TOL)
    return CheckResult("bipartite_radius_implies_spectrum", _status(not coincide or equal),
                       {"rho_NL": rho, "rho_NL_G": rho_g, "radii_equal": coincide, "spectra_equal": equal})


def _check_eigenvalue_two(f: _Facts):
    missing = _needs(f)
    if missing:
        return _not_met("bipartite_eigenvalue_two", missing)
    has_two = eigen.multiplicity(f.spec("NL"), 2.0, SPEC_TOL) > 0
    b, bal = f.bipartite, f.balanced
    implications = {
        "balanced_bipartite_gives_two": (b and bal, has_two),
        "balanced_with_two_gives_bipartite": (bal and has_two, b),
        "bipartite_with_two_gives_balanced": (b and has_two, bal),
    }
    applied = [k for k, (hyp, _) in implications.items() if hyp]
    details = {"has_eigenvalue_two": has_two, "bipartite": b, "balanced": bal, "applied": applied}
    if not applied:
        return _not_met("bipartite_eigenvalue_two", ["no implication applies"], **details)
    ok = all(concl for hyp, concl in implications.values() if hyp)
    return CheckResult("bipartite_eigenvalue_two", _status(ok), details)


def _check_bipartite_radius_equivalences(f: _Facts):
    missing = _needs(f)
    if not f.bipartite:
        missing.append("bipartite")
    if missing:
        return _not_met("bipartite_radius_equivalences", missing)
    equal = spectra_equal(f.spec("NL"), f.spec("NL_G"), SPEC_TOL)
    rho = _radius(f.lam)
    rho_neg_g = _radius(f.spec("NL_negG").values)
    rho_neg_phi = _radius(f.spec("NL_negPhi").values)
    iff = equal == (abs(rho_neg_g - rho) <= SPEC_TOL)
    impl = not equal or abs(rho - rho_neg_phi) <= SPEC_TOL
    return CheckResult("bipartite_radius_equivalences", _status(iff and impl), {
        "spectra_equal": equal, "rho_NL": rho, "rho_NL_negG": rho_neg_g, "rho_NL_negPhi": rho_neg_phi})


def _check_bipartite_symmetry(f: _Facts):
    missing = _needs(f)
    if not f.bipartite:
        missing.append("bipartite")
    if missing:
        return _not_met("bipartite_symmetric_spectrum", missing)
    spec = f.spec("NL")
    dev = float(np.max(np.abs(spec.values - spec.reflected().values)))
    return CheckResult("bipartite_symmetric_spectrum", _status(dev <= SPEC_TOL), {"max_deviation": dev})


def _check_symmetry_converse(f: _Facts):
    """Records (never fails) whether a symmetric spectrum comes from a non-bipartite graph."""
    missing = _needs(f)
    if missing:
        return _not_met("symmetry_converse_record", missing)
    sym = eigen.is_symmetric_about_one(f.spec("NL"), SPEC_TOL)
    if not sym:
        return _not_met("symmetry_converse_record", ["spectrum symmetric about 1"])
    return CheckResult("symmetry_converse_record", PASS, {
        "symmetric_about_one": True, "bipartite": f.bipartite,
        "converse_fails_here": not f.bipartite})


def theorem_suite(g: GainGraph, n_vectors: int = 10, n_rayleigh: int = 100,
                  seed: int = 0) -> VerificationReport:
    """Run every registered check on ``g`` and collect the results."""
    f = _Facts(g)
    rng = np.random.default_rng(seed)
    xs = _random_vectors(rng, g.n, n_vectors)
    ys = _random_vectors(rng, g.n, n_rayleigh)
    runners = {
        "balance_witness": lambda: _check_balance_witness(f),
        "bipartite_balance_link": lambda: _check_bipartite_balance_link(f),
        "switching_invariance": lambda: _check_switching_invariance(f, rng),
        "bipartite_iff_normadj_spectrum_symmetric": lambda: _check_bipartite_normadj(f),
        "radius_domination": lambda: _check_radius_domination(f),
        "laplacian_quadratic_form": lambda: _check_laplacian_form(f, xs),
        "norm_laplacian_quadratic_form": lambda: _check_norm_laplacian_form(f, xs),
        "rayleigh_bounds": lambda: _check_rayleigh(f, ys),
        "eigenvalues_in_0_2": lambda: _check_bounds(f),
        "trace_equals_n": lambda: _check_trace(f),
        "lambda2_upper_bound": lambda: _check_lambda2(f),
        "lambdan_lower_bound_if_balanced": lambda: _check_lambdan(f),
        "complete_balanced_equality": lambda: _check_complete_equality(f),
        "extremes_straddle_one": lambda: _check_straddle(f),
        "spectrum_matches_underlying_iff_balanced": lambda: _check_spec_vs_underlying(f),
        "singular_iff_balanced": lambda: _check_singular(f),
        "zero_simple_when_singular": lambda: _check_zero_simple(f),
        "negation_reflects_spectrum": lambda: _check_negation(f),
        "negation_equal_iff_symmetric": lambda: _check_negation_symmetric(f),
        "radius_two_iff_balanced": lambda: _check_radius_two(f),
        "bipartite_radius_implies_spectrum": lambda: _check_bipartite_radius_spectrum(f),
        "bipartite_eigenvalue_two": lambda: _check_eigenvalue_two(f),
        "bipartite_radius_equivalences": lambda: _check_bipartite_radius_equivalences(f),
        "bipartite_symmetric_spectrum": lambda: _check_bipartite_symmetry(f),
        "symmetry_converse_record": lambda: _check_symmetry_converse(f),
    }
    checks = []
    for check_id in CHECK_IDS:
        try:
            checks.append(runners[check_id]())
        except Exception as exc:  # a crashing check is reported, never propagated
            checks.append(CheckResult(check_id, FAIL, {"error": f"{type(exc).__name__}: {exc}"}))
    return VerificationReport(f.summary, checks)


# -- campaigns ---------------------------------------------------------------


@dataclass
class FuzzSummary:
    trials: int
    counts: dict[str, Counter]
    failures: list[tuple[int, str, dict]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "counts": {k: dict(v) for k, v in self.counts.items()},
            "failures": [{"trial": t, "check_id": c, "details": _jsonable(d)} for t, c, d in self.failures],
        }


def run_fuzz(cfg: FuzzConfig, n_vectors: int = 10, n_rayleigh: int = 100,
             interlace: bool = True) -> FuzzSummary:
    """Theorem suite on every generated graph, plus one random edge deletion each."""
    counts: dict[str, Counter] = {cid: Counter() for cid in CHECK_IDS}
    if interlace:
        counts["edge_interlacing"] = Counter()
    failures = []
    for trial in range(cfg.trials):
        g = random_trial(cfg, trial)
        report = theorem_suite(g, n_vectors, n_rayleigh, seed=cfg.seed * 1_000_003 + trial)
        for c in report.checks:
            counts[c.check_id][c.status] += 1
            if c.status == FAIL:
                failures.append((trial, c.check_id, c.details))
        if interlace:
            if g.m == 0:
                counts["edge_interlacing"][NOT_MET] += 1
                continue
            rng = trial_rng(cfg, trial)
            u, v, _ = g.edges[int(rng.integers(g.m))]
            res = interlace_check(g, (u, v))
            counts["edge_interlacing"][_status(res.passed)] += 1
            if not res.passed:
                failures.append((trial, "edge_interlacing", {
                    "edge": [u, v], "lambda": res.lam.values, "theta": res.theta.values}))
    return FuzzSummary(cfg.trials, counts, failures)


@dataclass
class ConjectureResult:
    examined: int
    skipped: int
    hits: list[GainGraph]
    nearest_gap: float | None
    nearest_graph: GainGraph | None
    bipartite_mode: bool

    @property
    def counterexample(self) -> GainGraph | None:
        return self.hits[0] if self.hits else None

    @property
    def theorem_violation(self) -> bool:
        """A hit on a bipartite graph contradicts a proven statement."""
        return self.bipartite_mode and bool(self.hits)


def conjecture_search(cfg: FuzzConfig, tol: float = 1e-7, max_draws: int | None = None) -> ConjectureResult:
    """Look for connected unbalanced graphs with rho(NL(Phi)) == rho(NL(G)).

    Without ``cfg.bipartite`` the search examines non-bipartite graphs (for
    bipartite ones the statement is proven) and hits are open-conjecture
    counterexamples, reported but never asserted. With ``cfg.bipartite`` it
    examines bipartite graphs, where any hit is a bug. ``cfg.trials`` counts
    examined graphs; draws that are disconnected, balanced, have isolated
    vertices or the wrong bipartiteness are skipped.
    """
    if max_draws is None:
        max_draws = 50 * max(cfg.trials, 1)
    examined = skipped = 0
    hits = []
    best_gap, best_graph = None, None
    draw = 0
    while examined < cfg.trials and draw < max_draws:
        g = random_trial(cfg, draw)
        draw += 1
        if (
            g.n < 2 or min(g.degrees) == 0 or not is_connected(g)
            or is_bipartite(g)[0] != cfg.bipartite or is_balanced(g)[0]
        ):
            skipped += 1
            continue
        examined += 1
        gap = abs(spectral_radius(norm_laplacian(g)) - spectral_radius(norm_laplacian(underlying(g))))
        if best_gap is None or gap < best_gap:
            best_gap, best_graph = gap, g
        if gap < tol:
            hits.append(g)
    return ConjectureResult(examined, skipped, hits, best_gap, best_graph, cfg.bipartite)
