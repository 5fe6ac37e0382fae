"""Discrete-time SIS simulation on an (optionally immunized) graph.

Updates are synchronous: from the infected set at the start of a step, a
susceptible vertex with ``c`` infected neighbors catches the infection with
probability ``1 - (1 - beta)**c`` and an infected vertex recovers with
probability ``delta``.  Vertices infected during a step cannot recover in it.

Trial ``t`` draws from ``numpy.random.Generator(PCG64(SeedSequence([seed, t])))``
so results do not depend on how trials are scheduled.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, remove_vertices
from .spectral import DEFAULT_TOL, lambda1

RNG_NAME = "numpy PCG64 / SeedSequence([seed, trial])"


@dataclass(frozen=True)
class SisConfig:
    beta: float
    delta: float
    steps: int = 100
    trials: int = 20
    seed: int = 0
    # fraction of alive vertices, or explicit dense indices
    initial_infected: float | Sequence[int] = 0.1

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta}")
        if not 0.0 <= self.delta <= 1.0:
            raise ValueError(f"delta must lie in [0, 1], got {self.delta}")
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if isinstance(self.initial_infected, float) and not 0.0 <= self.initial_infected <= 1.0:
            raise ValueError("initial_infected fraction must lie in [0, 1]")


@dataclass
class SisResult:
    infected_ts: np.ndarray   # mean infected count at steps 0..steps
    min_ts: np.ndarray
    max_ts: np.ndarray
    final_counts: np.ndarray  # per-trial count at the last step
    beta_over_delta: float
    threshold: float
    rng: str = RNG_NAME

    @property
    def final_mean(self) -> float:
        return float(self.final_counts.mean())

    @property
    def above_threshold(self) -> bool:
        return self.beta_over_delta > self.threshold

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["step", "mean_infected", "min", "max"])
        for t, (mean, lo, hi) in enumerate(zip(self.infected_ts, self.min_ts, self.max_ts)):
            w.writerow([t, f"{mean:.6f}", int(lo), int(hi)])
        return buf.getvalue()


def epidemic_threshold(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """``1 / lambda1``; ``math.inf`` for an edgeless graph."""
    lam = lambda1(g, tol).lambda1
    return math.inf if lam <= 0 else 1.0 / lam


def _initial(h: Graph, cfg: SisConfig, rng) -> np.ndarray:
    x = np.zeros(h.n, dtype=bool)
    init = cfg.initial_infected
    if isinstance(init, (int, float)) and not isinstance(init, bool):
        if h.n:
            count = max(1, int(round(float(init) * h.n)))
            x[rng.choice(h.n, size=min(count, h.n), replace=False)] = True
    else:
        parent = {int(p): i for i, p in enumerate(h.parent_index)}
        idx = [parent[v] for v in init if int(v) in parent]
        x[idx] = True
    return x


def sis_simulate(g: Graph, cfg: SisConfig, immunized: Iterable[int] = ()) -> SisResult:
    """Average SIS trajectories over ``cfg.trials`` seeded runs.

    Immunized vertices are deleted before the run.  Counts refer to the
    surviving vertices only.
    """
    h = remove_vertices(g, immunized)
    a = h.adjacency()
    counts = np.zeros((cfg.trials, cfg.steps + 1), dtype=np.int64)
    log_stay = math.log1p(-cfg.beta) if cfg.beta < 1 else 0.0
    for trial in range(cfg.trials):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([cfg.seed, trial])))
        x = _initial(h, cfg, rng)
        counts[trial, 0] = x.sum()
        for t in range(1, cfg.steps + 1):
            c = a @ x.astype(np.float64)
            p_inf = -np.expm1(c * log_stay) if cfg.beta < 1 else (c > 0).astype(float)
            u_inf = rng.random(h.n)
            u_rec = rng.random(h.n)
            caught = ~x & (u_inf < p_inf)
            cured = x & (u_rec < cfg.delta)
            x = (x & ~cured) | caught
            counts[trial, t] = x.sum()
    tau = epidemic_threshold(g)
    ratio = cfg.beta / cfg.delta if cfg.delta > 0 else math.inf
    return SisResult(counts.mean(axis=0), counts.min(axis=0), counts.max(axis=0),
                     counts[:, -1].copy(), ratio, tau)


def save_ratio(g: Graph, cfg: SisConfig, s: Iterable[int]) -> float:
    """Final mean infected with ``s`` immunized over the same without immunization."""
    with_s = sis_simulate(g, cfg, s).final_mean
    without = sis_simulate(g, cfg, ()).final_mean
    if without == 0:
        return 0.0 if with_s == 0 else math.inf
    return with_s / without
