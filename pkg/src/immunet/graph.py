"""Simple undirected graphs in compressed (CSR) adjacency form.

Vertices are dense indices ``0..n-1``; the external label of each vertex is
kept in ``Graph.labels``.  Graphs are immutable once built.
"""
from __future__ import annotations

import gzip
import io
import os
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import GraphParseError

COMMENT_PREFIXES = ("#", "%")


class Graph:
    """Immutable simple undirected graph.

    Parameters are the raw CSR arrays; use :func:`from_edges` or
    :func:`parse_edge_list` rather than calling this directly.

    Attributes
    ----------
    indptr, indices : ndarray
        CSR adjacency. Neighbors of ``v`` are ``indices[indptr[v]:indptr[v+1]]``,
        sorted ascending.
    labels : tuple of str
        External label of each dense index.
    parent_index : ndarray or None
        For graphs produced by :func:`remove_vertices`, the dense index of
        each vertex in the graph it was cut from.
    """

    __slots__ = ("indptr", "indices", "labels", "parent_index", "_label_index", "_matrix")

    def __init__(self, indptr, indices, labels, parent_index=None):
        indptr = np.asarray(indptr, dtype=np.int64)
        indices = np.asarray(indices, dtype=np.int64)
        indptr.setflags(write=False)
        indices.setflags(write=False)
        if parent_index is not None:
            parent_index = np.asarray(parent_index, dtype=np.int64)
            parent_index.setflags(write=False)
        self.indptr = indptr
        self.indices = indices
        self.labels = tuple(labels)
        self.parent_index = parent_index
        self._label_index = None
        self._matrix = None
        if len(self.labels) != len(indptr) - 1:
            raise ValueError("one label per vertex required")

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        _check_vertex(self, v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def index_of(self, label) -> int:
        """Dense index of an external label (``KeyError`` if unknown)."""
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        return self._label_index[str(label)]

    def edges(self) -> np.ndarray:
        """``(m, 2)`` array of edges with ``u < v``, in CSR order."""
        rows = np.repeat(np.arange(self.n), self.degrees)
        keep = rows < self.indices
        return np.column_stack([rows[keep], self.indices[keep]])

    def adjacency(self) -> sp.csr_matrix:
        """Sparse 0/1 adjacency matrix (cached)."""
        if self._matrix is None:
            data = np.ones(len(self.indices), dtype=np.float64)
            self._matrix = sp.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))
        return self._matrix

    def dense(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        rows = np.repeat(np.arange(self.n), self.degrees)
        a[rows, self.indices] = 1
        return a

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(g: Graph, v) -> None:
    if not (0 <= v < g.n):
        raise IndexError(f"vertex {v} out of range for graph with n={g.n}")


def from_edges(edges, n: int | None = None, labels: Sequence | None = None) -> Graph:
    """Build a graph from an integer edge array of dense indices.

    Self-loops are dropped and duplicate edges (in either orientation)
    collapsed.  ``n`` defaults to ``max index + 1``; labels default to the
    decimal index.
    """
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if n is None:
        n = int(e.max()) + 1 if len(e) else 0
    if len(e) and (e.min() < 0 or e.max() >= n):
        raise IndexError("edge endpoint out of range")
    e = e[e[:, 0] != e[:, 1]]
    lo = np.minimum(e[:, 0], e[:, 1])
    hi = np.maximum(e[:, 0], e[:, 1])
    key = np.unique(lo * n + hi)
    lo, hi = key // n, key % n
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    if labels is None:
        labels = [str(i) for i in range(n)]
    return Graph(indptr, dst, [str(x) for x in labels])


def parse_edge_list(text) -> Graph:
    """Parse whitespace-separated edge-list text (``str`` or ``bytes``).

    Labels are remapped to dense indices in first-appearance order.  Lines
    starting with ``#`` or ``%`` and blank lines are skipped.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    index: dict[str, int] = {}
    ends: list[int] = []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        s = line.strip()
        if not s or s.startswith(COMMENT_PREFIXES):
            continue
        tok = s.split()
        if len(tok) != 2:
            raise GraphParseError(lineno, line.rstrip("\n"))
        for t in tok:
            i = index.get(t)
            if i is None:
                i = index[t] = len(index)
            ends.append(i)
    return from_edges(np.array(ends, dtype=np.int64).reshape(-1, 2), n=len(index), labels=list(index))


def read_edge_list(path) -> Graph:
    path = os.fspath(path)
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rb") as fh:
        return parse_edge_list(fh.read())


def to_edge_list(g: Graph) -> str:
    """Serialize as one ``label label`` line per edge (external labels).

    Isolated vertices are not representable in this format and are lost.
    """
    lab = g.labels
    return "".join(f"{lab[u]} {lab[v]}\n" for u, v in g.edges().tolist())


def write_ids(g: Graph, path) -> None:
    """Write the ``.ids`` sidecar: line ``i`` holds the label of dense index ``i``."""
    with open(path, "w", encoding="utf-8") as fh:
        for lab in g.labels:
            fh.write(f"{lab}\n")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return int(g.indptr[v + 1] - g.indptr[v])


def codegree(g: Graph, u: int, v: int) -> int:
    """Size of the common neighborhood of ``u`` and ``v``; ``degree(v)`` when ``u == v``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return degree(g, v)
    return int(np.intersect1d(g.neighbors(u), g.neighbors(v), assume_unique=True).size)


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on ``V \\ s``.

    Surviving vertices are renumbered densely in their original order;
    ``parent_index`` maps them back to ``g`` and labels are carried over.
    """
    s = np.fromiter((int(x) for x in s), dtype=np.int64)
    if s.size and (s.min() < 0 or s.max() >= g.n):
        raise IndexError("vertex set member out of range")
    keep = np.ones(g.n, dtype=bool)
    keep[s] = False
    new_id = np.cumsum(keep) - 1
    e = g.edges()
    e = e[keep[e[:, 0]] & keep[e[:, 1]]]
    survivors = np.flatnonzero(keep)
    h = from_edges(new_id[e], n=len(survivors), labels=[g.labels[i] for i in survivors])
    return Graph(h.indptr, h.indices, h.labels, parent_index=survivors)
