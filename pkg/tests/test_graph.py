import gzip

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from immunet import GraphParseError, codegree, degree, parse_edge_list, remove_vertices
from immunet.graph import from_edges, read_edge_list, to_edge_list, write_ids
from immunet.generators import complete_graph, empty_graph, path_graph, star_graph


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert (g.n, g.m) == (3, 2)
    assert g.neighbors(1).tolist() == [0, 2]


def test_parse_dedup_and_self_loop():
    g = parse_edge_list(b"0 1\n1 0\n2 2")
    assert (g.n, g.m) == (3, 1)
    assert degree(g, 2) == 0


def test_parse_comments_and_labels():
    g = parse_edge_list("# header\n% konect\n\nalice bob\nbob carol\n")
    assert g.labels == ("alice", "bob", "carol")
    assert g.index_of("carol") == 2


def test_parse_first_appearance_order():
    g = parse_edge_list("10 5\n5 7\n")
    assert g.labels == ("10", "5", "7")
    assert g.neighbors(1).tolist() == [0, 2]


def test_parse_empty():
    g = parse_edge_list("")
    assert (g.n, g.m) == (0, 0)


@pytest.mark.parametrize("text,lineno", [("0 1\n1 2 3\n", 2), ("# c\n7\n", 2)])
def test_parse_malformed(text, lineno):
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_karate_counts(karate_graph):
    assert (karate_graph.n, karate_graph.m) == (34, 78)
    assert karate_graph.degrees.sum() == 2 * 78


def test_degree_examples(path3, star3):
    assert degree(path3, 1) == 2
    assert degree(star3, 0) == 3
    assert degree(from_edges([(0, 1)], n=3), 2) == 0
    with pytest.raises(IndexError):
        degree(path3, 3)
    with pytest.raises(IndexError):
        degree(path3, -1)


def test_codegree_examples(k3, star3):
    assert codegree(k3, 0, 1) == 1
    assert codegree(star3, 1, 2) == 1
    assert codegree(star3, 1, 0) == 0
    assert codegree(star3, 0, 0) == 3
    with pytest.raises(IndexError):
        codegree(star3, 0, 9)


def test_remove_vertices_examples(k3, star3):
    h = remove_vertices(k3, [2])
    assert (h.n, h.m) == (2, 1)
    h = remove_vertices(star3, [0])
    assert (h.n, h.m) == (3, 0)
    assert h.labels == ("1", "2", "3")
    assert h.parent_index.tolist() == [1, 2, 3]
    with pytest.raises(IndexError):
        remove_vertices(star3, [4])


def test_remove_nothing_is_identity(karate_graph):
    h = remove_vertices(karate_graph, [])
    assert (h.n, h.m) == (karate_graph.n, karate_graph.m)
    assert np.array_equal(h.indptr, karate_graph.indptr)
    assert np.array_equal(h.indices, karate_graph.indices)
    assert h.labels == karate_graph.labels


def test_graph_is_immutable(path3):
    with pytest.raises(ValueError):
        path3.indices[0] = 2


def test_gzip_and_ids(tmp_path):
    p = tmp_path / "g.txt.gz"
    with gzip.open(p, "wt") as fh:
        fh.write("a b\nb c\n")
    g = read_edge_list(p)
    assert (g.n, g.m) == (3, 2)
    write_ids(g, tmp_path / "g.ids")
    assert (tmp_path / "g.ids").read_text().splitlines() == ["a", "b", "c"]


edge_lists = st.lists(st.tuples(st.integers(0, 14), st.integers(0, 14)), max_size=60)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_invariants_symmetric_simple(edges):
    g = from_edges(edges, n=15)
    a = g.dense()
    assert np.array_equal(a, a.T)
    assert not a.diagonal().any()
    assert a.max(initial=0) <= 1
    assert g.degrees.sum() == 2 * g.m
    for v in range(g.n):
        nb = g.neighbors(v)
        assert np.all(np.diff(nb) > 0)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_round_trip(edges):
    g = parse_edge_list("".join(f"v{u} v{w}\n" for u, w in edges))
    h = parse_edge_list(to_edge_list(g))
    # same labelled edge set
    lab = lambda x: {frozenset((x.labels[u], x.labels[w])) for u, w in x.edges().tolist()}
    assert lab(g) == lab(h)
    # isolated vertices have no edge line to survive on
    assert (g.m, int((g.degrees > 0).sum())) == (h.m, h.n)


@settings(max_examples=150, deadline=None)
@given(edge_lists, st.sets(st.integers(0, 14), max_size=8))
def test_remove_matches_matrix_deletion(edges, s):
    g = from_edges(edges, n=15)
    keep = [v for v in range(15) if v not in s]
    naive = g.dense()[np.ix_(keep, keep)]
    h = remove_vertices(g, s)
    assert np.array_equal(h.dense(), naive)
    assert h.degrees.tolist() == naive.sum(axis=1).tolist()
    incident = sum(1 for u, w in g.edges().tolist() if u in s or w in s)
    assert h.m == g.m - incident


def test_generators():
    assert (path_graph(5).m, star_graph(4).m, complete_graph(5).m, empty_graph(3).m) == (4, 4, 10, 0)
