"""Reproducible random gain graphs."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .errors import BadConfigError
from .graph import GainGraph, build, is_connected

GAIN_MODES = ("all_one", "signs", "fourth_roots", "uniform_circle")
# "mixed" cycles through GAIN_MODES by trial index
ALL_GAIN_MODES = GAIN_MODES + ("mixed",)
MAX_RESAMPLE = 10_000


@dataclass(frozen=True)
class FuzzConfig:
    n_range: tuple[int, int] = (2, 8)
    edge_probability: float = 0.5
    gain_mode: str = "mixed"
    trials: int = 100
    seed: int = 0
    connected: bool = False
    bipartite: bool = False

    def __post_init__(self):
        lo, hi = self.n_range
        if not (isinstance(lo, int) and isinstance(hi, int) and 1 <= lo <= hi):
            raise BadConfigError(f"bad n_range {self.n_range}")
        if not 0.0 < self.edge_probability <= 1.0:
            raise BadConfigError(f"edge_probability {self.edge_probability} not in (0, 1]")
        if self.gain_mode not in ALL_GAIN_MODES:
            raise BadConfigError(f"gain_mode {self.gain_mode!r} not in {ALL_GAIN_MODES}")
        if self.trials < 0 or self.seed < 0:
            raise BadConfigError("trials and seed must be non-negative")


def draw_gain(rng: np.random.Generator, mode: str) -> complex:
    if mode == "all_one":
        return 1 + 0j
    if mode == "signs":
        return complex(rng.choice((1.0, -1.0)))
    if mode == "fourth_roots":
        return (1 + 0j, 1j, -1 + 0j, -1j)[int(rng.integers(4))]
    if mode == "uniform_circle":
        t = rng.uniform(0.0, 2.0 * math.pi)
        return complex(math.cos(t), math.sin(t))
    raise BadConfigError(f"unknown gain mode {mode!r}")


def mode_for_trial(cfg: FuzzConfig, trial: int) -> str:
    if cfg.gain_mode == "mixed":
        return GAIN_MODES[trial % len(GAIN_MODES)]
    return cfg.gain_mode


def trial_rng(cfg: FuzzConfig, trial: int) -> np.random.Generator:
    """Independent generator for one trial, derived from the config seed."""
    return np.random.default_rng(np.random.SeedSequence(cfg.seed, spawn_key=(trial,)))


def random_graph(rng: np.random.Generator, n: int, p: float, mode: str,
                 connected: bool = False, bipartite: bool = False) -> GainGraph:
    """Erdos-Renyi G(n, p) with gains drawn by ``mode``.

    ``bipartite`` only allows edges across a random two-sided split;
    ``connected`` resamples until the underlying graph is connected.
    """
    for _ in range(MAX_RESAMPLE):
        if bipartite:
            side = rng.integers(2, size=n)
            if n >= 2 and side.min() == side.max():
                side[int(rng.integers(n))] ^= 1
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if bipartite and side[u] == side[v]:
                    continue
                if rng.random() < p:
                    edges.append((u, v, draw_gain(rng, mode)))
        g = build(n, edges)
        if not connected or is_connected(g):
            return g
    raise BadConfigError(f"no connected sample after {MAX_RESAMPLE} tries (n={n}, p={p})")


def random_gain_graph(cfg: FuzzConfig) -> Iterator[GainGraph]:
    """Stream of ``cfg.trials`` graphs; identical configs give identical streams."""
    for trial in range(cfg.trials):
        yield random_trial(cfg, trial)


def random_trial(cfg: FuzzConfig, trial: int) -> GainGraph:
    rng = trial_rng(cfg, trial)
    lo, hi = cfg.n_range
    n = int(rng.integers(lo, hi + 1))
    return random_graph(rng, n, cfg.edge_probability, mode_for_trial(cfg, trial),
                        cfg.connected, cfg.bipartite)
