"""Closed-walk counts and the degree/codegree vertex scores.

``score'(v) = 2 d(v)^2 + 4 (sum_{u != v} d(u, v))^2`` where the codegree sum
equals ``sum_{w in N(v)} (d(w) - 1)``.  :class:`ScoreState` keeps these
tables for the alive part of a graph and updates them in time proportional
to the second neighborhood of a deleted vertex.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import CapabilityError, StateError
from .graph import Graph, _check_vertex, remove_vertices
from .spectral import trace_power

CW_BRUTE_MAX_N = 12
CW_BRUTE_MAX_P = 8


def _score(deg, codeg_sum):
    return 2 * deg * deg + 4 * codeg_sum * codeg_sum


def codegrees_of(g: Graph, v: int) -> np.ndarray:
    """``d(u, v)`` for every ``u``, by one pass over the adjacency with the
    characteristic vector of ``N(v)``.  Entry ``v`` holds ``d(v)``."""
    _check_vertex(g, v)
    chi = np.zeros(g.n, dtype=np.int64)
    chi[g.neighbors(v)] = 1
    hits = np.concatenate([[0], np.cumsum(chi[g.indices])])
    return hits[g.indptr[1:]] - hits[g.indptr[:-1]]


def cw4_vertex(g: Graph, v: int) -> int:
    """Exact number of closed 4-walks through ``v``."""
    cod = codegrees_of(g, v)
    d = int(cod[v])
    cod[v] = 0
    return 2 * d * d + 4 * int((cod * cod).sum())


def cw_brute_all(g: Graph, p: int) -> np.ndarray:
    """Per-vertex counts of closed ``p``-walks containing each vertex.

    Exhaustive enumeration over vertex sequences ``v0 .. v_{p-1} v0``;
    guarded to ``n <= 12`` and ``p <= 8``.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if g.n > CW_BRUTE_MAX_N or p > CW_BRUTE_MAX_P:
        raise CapabilityError(
            f"closed-walk enumeration limited to n <= {CW_BRUTE_MAX_N}, p <= {CW_BRUTE_MAX_P}")
    nbrs = [set(g.neighbors(v).tolist()) for v in range(g.n)]
    counts = [0] * g.n
    walk = [0] * p

    def extend(depth):
        last = walk[depth - 1]
        if depth == p:
            if walk[0] in nbrs[last]:
                for x in set(walk):
                    counts[x] += 1
            return
        for x in nbrs[last]:
            walk[depth] = x
            extend(depth + 1)

    for start in range(g.n):
        walk[0] = start
        extend(1)
    return np.array(counts, dtype=np.int64)


def cw_brute(g: Graph, v: int, p: int) -> int:
    _check_vertex(g, v)
    return int(cw_brute_all(g, p)[v])


def gp_set(g: Graph, s: Iterable[int], p: int) -> int:
    """Number of closed ``p``-walks meeting ``s``: ``tr(A^p) - tr(A_{-s}^p)``."""
    s = list(s)
    return trace_power(g, p) - trace_power(remove_vertices(g, s), p)


@dataclass
class ScoreState:
    """Mutable degree / codegree-sum / score tables over the alive vertices.

    ``heap`` holds ``(-score, vertex)`` entries. Scores only ever decrease,
    so entries may be stale-high; :meth:`pop_max` re-inserts those lazily.
    """

    deg: np.ndarray
    codeg_sum: np.ndarray
    score: np.ndarray
    alive: np.ndarray
    heap: list = field(default_factory=list, repr=False)

    def pop_max(self) -> int:
        """Remove and return the alive vertex with the largest score
        (lowest index on ties), or -1 if none is left.  Does not delete it."""
        heap = self.heap
        while heap:
            neg, v = heapq.heappop(heap)
            if not self.alive[v]:
                continue
            cur = int(self.score[v])
            if -neg != cur:
                heapq.heappush(heap, (-cur, v))
                continue
            return v
        return -1

    def tables(self):
        return self.deg.copy(), self.codeg_sum.copy(), self.score.copy()


def compute_scores(g: Graph) -> ScoreState:
    deg = g.degrees.astype(np.int64)
    # codeg_sum[v] = sum over neighbors w of (deg[w] - 1)
    acc = np.concatenate([[0], np.cumsum(deg[g.indices] - 1)])
    codeg_sum = acc[g.indptr[1:]] - acc[g.indptr[:-1]]
    score = _score(deg, codeg_sum)
    heap = list(zip((-score).tolist(), range(g.n)))
    heapq.heapify(heap)
    return ScoreState(deg, codeg_sum, score, np.ones(g.n, dtype=bool), heap)


def update_scores(st: ScoreState, g: Graph, v: int) -> None:
    """Delete ``v`` and bring every alive vertex's tables up to date.

    Afterwards the tables equal :func:`compute_scores` on the graph with all
    dead vertices removed.
    """
    _check_vertex(g, v)
    if not st.alive[v]:
        raise StateError(f"vertex {v} already deleted")
    alive = st.alive
    nb = g.indices[g.indptr[v]:g.indptr[v + 1]]
    nb = nb[alive[nb]]
    dv = int(st.deg[v])
    alive[v] = False
    st.deg[v] = st.codeg_sum[v] = st.score[v] = 0
    if nb.size == 0:
        return
    st.deg[nb] -= 1
    # each neighbor loses v's term (d(v) - 1)
    st.codeg_sum[nb] -= dv - 1
    # each neighbor's degree fell by one, so its alive neighbors lose 1 each
    starts, ends = g.indptr[nb], g.indptr[nb + 1]
    lens = ends - starts
    offs = np.repeat(starts - np.concatenate([[0], np.cumsum(lens)[:-1]]), lens)
    second = g.indices[np.arange(lens.sum()) + offs]
    second = second[alive[second]]
    if second.size:
        hit = np.bincount(second, minlength=g.n)
        touched = np.flatnonzero(hit)
        st.codeg_sum[touched] -= hit[touched]
        touched = np.union1d(touched, nb)
    else:
        touched = nb
    st.score[touched] = _score(st.deg[touched], st.codeg_sum[touched])
