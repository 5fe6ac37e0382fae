"""Small deterministic and seeded random graph families."""
from __future__ import annotations

import numpy as np

from .graph import Graph, from_edges


def path_graph(n: int) -> Graph:
    return from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def star_graph(leaves: int) -> Graph:
    """Center is vertex 0."""
    return from_edges([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def complete_graph(n: int) -> Graph:
    return from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


def cycle_graph(n: int) -> Graph:
    return from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def empty_graph(n: int) -> Graph:
    return from_edges(np.zeros((0, 2), dtype=np.int64), n=n)


def gnp(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = np.random.default_rng(rng)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return from_edges(np.column_stack([iu[keep], ju[keep]]), n=n)


def chung_lu(n: int, m: int, exponent: float = 2.5, rng=None) -> Graph:
    """Power-law-ish graph with about ``m`` edges.

    Endpoints are drawn independently with weight ``(i + 1) ** (-1 / (exponent - 1))``;
    self-loops and repeats are discarded, so the edge count lands a little
    under ``m``.
    """
    rng = np.random.default_rng(rng)
    w = (np.arange(n) + 1.0) ** (-1.0 / (exponent - 1.0))
    w /= w.sum()
    ends = rng.choice(n, size=(m, 2), p=w)
    return from_edges(ends, n=n)
