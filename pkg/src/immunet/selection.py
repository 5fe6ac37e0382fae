"""k-vertex immunization strategies.

All strategies return a :class:`Selection` of distinct dense indices of
length ``min(k, n)`` and break ties toward the lowest vertex index.
Floating-point objectives count as tied within ``2 * tol``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .errors import CapabilityError
from .graph import Graph, remove_vertices
from .spectral import DEFAULT_TOL, lambda1, lambda1_dense, trace_power
from .walkscore import compute_scores, update_scores

GREEDY1_MAX_WORK = 200_000
BRUTE_MAX_SUBSETS = 1_000_000
# exhaustive references switch to a dense eigensolve below this size
DENSE_EIG_MAX_N = 256


@dataclass
class Selection:
    method: str
    picks: list = field(default_factory=list)
    per_step: list = field(default_factory=list)
    wall_time: float = 0.0

    def labels(self, g: Graph) -> list:
        return [g.labels[v] for v in self.picks]


def _timed(method):
    def wrap(fn):
        def run(g, k, *args, **kwargs):
            t0 = time.perf_counter()
            sel = fn(g, max(0, min(int(k), g.n)), *args, **kwargs)
            sel.method = method
            sel.wall_time = time.perf_counter() - t0
            return sel
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.__wrapped__ = fn
        return run
    return wrap


def _residual_lambda(g, removed, tol):
    h = remove_vertices(g, removed)
    if h.n <= DENSE_EIG_MAX_N:
        return lambda1_dense(h)
    return lambda1(h, tol).lambda1


def _pick_min(values, candidates, tol):
    """Lowest-index candidate whose value is within 2*tol of the minimum."""
    best = min(values)
    for v, val in zip(candidates, values):
        if val <= best + 2 * tol:
            return v, val


@_timed("greedy3")
def greedy3(g: Graph, k: int) -> Selection:
    """Greedy selection by the incrementally maintained ``score'``.

    One O(m) score pass, then ``k`` rounds of extract-max and a local
    update around the removed vertex.
    """
    st = compute_scores(g)
    sel = Selection("greedy3")
    for _ in range(k):
        v = st.pop_max()
        sel.picks.append(v)
        sel.per_step.append((v, int(st.score[v])))
        update_scores(st, g, v)
    return sel


@_timed("greedy1")
def greedy1(g: Graph, k: int, tol: float = DEFAULT_TOL) -> Selection:
    """Exact-eigendrop greedy: each round removes the vertex leaving the
    smallest residual largest eigenvalue."""
    if k * g.n > GREEDY1_MAX_WORK:
        raise CapabilityError(f"greedy1 needs k*n <= {GREEDY1_MAX_WORK} (k={k}, n={g.n})")
    sel = Selection("greedy1")
    chosen: list[int] = []
    for _ in range(k):
        cands = [v for v in range(g.n) if v not in chosen]
        vals = [_residual_lambda(g, chosen + [v], tol) for v in cands]
        v, val = _pick_min(vals, cands, tol)
        chosen.append(v)
        sel.per_step.append((v, val))
    sel.picks = chosen
    return sel


@_timed("greedy2")
def greedy2(g: Graph, k: int, p: int = 4) -> Selection:
    """Greedy on closed ``p``-walks: each round removes the vertex lying on
    the most closed ``p``-walks of the current residual graph."""
    sel = Selection("greedy2")
    chosen: list[int] = []
    base = trace_power(g, p)
    for _ in range(k):
        best_v, best_gain, best_tr = -1, -1, None
        for v in range(g.n):
            if v in chosen:
                continue
            tr = trace_power(remove_vertices(g, chosen + [v]), p)
            if base - tr > best_gain:
                best_v, best_gain, best_tr = v, base - tr, tr
        chosen.append(best_v)
        sel.per_step.append((best_v, best_gain))
        base = best_tr
    sel.picks = chosen
    return sel


@_timed("brute")
def brute_force_optimal(g: Graph, k: int, tol: float = DEFAULT_TOL) -> Selection:
    """Exhaustive minimum of the residual largest eigenvalue over k-subsets."""
    total = comb(g.n, k)
    if total > BRUTE_MAX_SUBSETS:
        raise CapabilityError(
            f"brute force limited to C(n, k) <= {BRUTE_MAX_SUBSETS} (C({g.n}, {k}) = {total})")
    subsets = list(combinations(range(g.n), k))
    vals = [_residual_lambda(g, s, tol) for s in subsets]
    s, val = _pick_min(vals, subsets, tol)
    return Selection("brute", list(s), [(v, val) for v in s])


@_timed("maxdeg")
def max_degree(g: Graph, k: int) -> Selection:
    """Top-k vertices by degree in the original graph."""
    deg = g.degrees
    order = np.argsort(-deg, kind="stable")[:k].tolist()
    return Selection("maxdeg", order, [(v, int(deg[v])) for v in order])


@_timed("updmaxdeg")
def updated_max_degree(g: Graph, k: int) -> Selection:
    """Repeatedly remove the current maximum-degree vertex."""
    deg = g.degrees.astype(np.int64)
    sel = Selection("updmaxdeg")
    for _ in range(k):
        v = int(np.argmax(deg))
        sel.picks.append(v)
        sel.per_step.append((v, int(deg[v])))
        nb = g.neighbors(v)
        nb = nb[deg[nb] >= 0]
        deg[nb] -= 1
        deg[v] = -1
    return sel


@_timed("netshield")
def netshield(g: Graph, k: int, tol: float = DEFAULT_TOL) -> Selection:
    """Greedy maximization of the NetShield shield value

    ``Sv(S) = sum_{i in S} 2 lam u_i^2 - sum_{i, j in S} A_ij u_i u_j``

    with ``lam, u`` the leading eigenpair of the full graph.
    """
    res = lambda1(g, tol)
    lam, u = res.lambda1, res.eigvec
    base = 2 * lam * u * u
    b = np.zeros(g.n)
    taken = np.zeros(g.n, dtype=bool)
    sel = Selection("netshield")
    for _ in range(k):
        gain = base - 2 * b * u
        gain[taken] = -np.inf
        v = int(np.flatnonzero(gain >= gain.max() - 2 * tol)[0])
        sel.picks.append(v)
        sel.per_step.append((v, float(gain[v])))
        taken[v] = True
        b[g.neighbors(v)] += u[v]
    return sel


METHODS = {
    "greedy3": greedy3,
    "greedy1": greedy1,
    "greedy2": greedy2,
    "netshield": netshield,
    "maxdeg": max_degree,
    "updmaxdeg": updated_max_degree,
    "brute": brute_force_optimal,
}


def select(method: str, g: Graph, k: int, p: int = 4, tol: float = DEFAULT_TOL) -> Selection:
    """Dispatch by method name as used on the command line."""
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}") from None
    if method == "greedy2":
        return fn(g, k, p)
    if method in ("greedy1", "brute", "netshield"):
        return fn(g, k, tol)
    return fn(g, k)
