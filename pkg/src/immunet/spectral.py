"""Largest adjacency eigenvalue, eigendrop, and exact trace powers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CapabilityError, NonConvergenceError
from .graph import Graph, remove_vertices

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 10_000
TRACE_POWER_MAX_N = 2048


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    eigvec: np.ndarray
    iterations: int
    residual: float
    converged: bool = True


@dataclass(frozen=True)
class EigendropReport:
    lambda_before: float
    lambda_after: float

    @property
    def drop(self) -> float:
        return self.lambda_before - self.lambda_after

    @property
    def drop_pct(self) -> float:
        if self.lambda_before > 0:
            return 100.0 * self.drop / self.lambda_before
        return 0.0


def lambda1(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest eigenvalue of the adjacency matrix by shifted power iteration.

    Iterates on ``A + I`` from the normalized all-ones vector and stops when
    successive Rayleigh quotients differ by less than ``tol``.  The shift
    keeps bipartite graphs from oscillating; the positive start vector
    reaches the Perron vector of every component.

    Raises
    ------
    NonConvergenceError
        If ``max_iter`` is reached; the exception carries the last estimate.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    n = g.n
    if n == 0 or g.m == 0:
        vec = np.full(n, 1.0 / np.sqrt(n)) if n else np.zeros(0)
        return SpectralResult(0.0, vec, 0, 0.0)

    a = g.adjacency()
    x = np.full(n, 1.0 / np.sqrt(n))
    rq = None
    for it in range(1, max_iter + 1):
        y = a @ x + x
        new_rq = float(x @ y)
        norm = np.linalg.norm(y)
        x = y / norm
        if rq is not None and abs(new_rq - rq) < tol:
            return _finish(a, x, it, True)
        rq = new_rq
    raise NonConvergenceError(_finish(a, x, max_iter, False))


def _finish(a, x, iterations, converged):
    ax = a @ x
    lam = float(x @ ax)
    residual = float(np.linalg.norm(ax - lam * x))
    x = np.abs(x)
    return SpectralResult(lam, x / np.linalg.norm(x), iterations, residual, converged)


def lambda1_dense(g: Graph) -> float:
    """Largest eigenvalue by a dense symmetric eigensolve (small graphs only)."""
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.dense(np.float64))[-1])


def eigendrop(g: Graph, s: Iterable[int], tol: float = DEFAULT_TOL,
              max_iter: int = DEFAULT_MAX_ITER) -> EigendropReport:
    before = lambda1(g, tol, max_iter).lambda1
    after = lambda1(remove_vertices(g, s), tol, max_iter).lambda1
    return EigendropReport(before, after)


def trace_power(g: Graph, p: int) -> int:
    """Exact ``tr(A^p)`` for even ``p`` via dense integer matrix products.

    This is a test oracle and is limited to ``n <= 2048``.  Uses
    ``tr(A^p) = ||A^(p/2)||_F^2`` for symmetric ``A``; falls back to Python
    integers when int64 could overflow.
    """
    if p < 2 or p % 2:
        raise ValueError(f"p must be an even integer >= 2, got {p}")
    if g.n > TRACE_POWER_MAX_N:
        raise CapabilityError(f"trace_power limited to n <= {TRACE_POWER_MAX_N} (n={g.n})")
    if g.m == 0:
        return 0
    max_deg = int(g.degrees.max())
    dtype = np.int64 if g.n * max_deg ** p < 2 ** 62 else object
    a = g.dense(np.int64).astype(dtype)
    half = a
    for _ in range(p // 2 - 1):
        half = half @ a
    return int((half * half).sum())
