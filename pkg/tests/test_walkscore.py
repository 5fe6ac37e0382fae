import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from immunet import (CapabilityError, StateError, compute_scores, cw4_vertex, cw_brute, gp_set,
                     remove_vertices, trace_power, update_scores)
from immunet.generators import complete_graph, empty_graph, gnp, path_graph, star_graph
from immunet.graph import codegree, from_edges
from immunet.walkscore import cw_brute_all

from conftest import count_closed_walks, random_graphs


def test_cw4_examples(k3, star3):
    assert cw4_vertex(complete_graph(2), 0) == cw4_vertex(complete_graph(2), 1) == 2
    assert cw4_vertex(k3, 1) == 16
    assert cw4_vertex(star3, 0) == 18 == trace_power(star3, 4)


def test_cw_brute_examples(k3):
    assert cw_brute(complete_graph(2), 0, 4) == 2
    assert cw_brute(k3, 2, 4) == 16
    g = from_edges([(0, 1)], n=3)
    assert cw_brute(g, 2, 4) == 0 and cw_brute(g, 2, 6) == 0


def test_cw_brute_guard():
    with pytest.raises(CapabilityError):
        cw_brute(empty_graph(13), 0, 4)
    with pytest.raises(CapabilityError):
        cw_brute(complete_graph(3), 0, 10)


def test_cw4_matches_enumeration():
    for g in random_graphs(120, 10, seed=31):
        brute = cw_brute_all(g, 4)
        assert [cw4_vertex(g, v) for v in range(g.n)] == brute.tolist()


def test_gp_set_examples(k3, karate_graph):
    assert gp_set(k3, [], 4) == 0
    assert gp_set(k3, [0, 1, 2], 4) == trace_power(k3, 4)
    assert gp_set(k3, [0], 4) == cw_brute(k3, 0, 4) == 16


def test_gp_singletons_are_vertex_walk_counts():
    for g in random_graphs(30, 9, seed=8):
        brute = cw_brute_all(g, 6)
        assert [gp_set(g, [v], 6) for v in range(g.n)] == brute.tolist()


def test_total_walks_identity():
    for g in random_graphs(50, 10, seed=2):
        assert gp_set(g, range(g.n), 4) == trace_power(g, 4) == count_closed_walks(g, 4)


def test_compute_scores_path(path3):
    deg, cs, sc = compute_scores(path3).tables()
    assert deg.tolist() == [1, 2, 1]
    assert cs.tolist() == [1, 0, 1]
    assert sc.tolist() == [6, 8, 6]


def test_compute_scores_empty_and_star(star3):
    assert not any(a.any() for a in compute_scores(empty_graph(4)).tables())
    assert compute_scores(star3).score.tolist() == [18, 18, 18, 18]


def test_codeg_sum_matches_pairwise_codegrees():
    for g in random_graphs(40, 12, seed=4):
        cs = compute_scores(g).codeg_sum
        for v in range(g.n):
            assert cs[v] == sum(codegree(g, u, v) for u in range(g.n) if u != v)


def test_update_examples(path3, k3, star3):
    st_ = compute_scores(path3)
    update_scores(st_, path3, 1)
    assert [a.tolist() for a in st_.tables()] == [[0, 0, 0]] * 3

    st_ = compute_scores(k3)
    update_scores(st_, k3, 0)
    assert st_.deg.tolist() == [0, 1, 1]
    assert st_.codeg_sum.tolist() == [0, 0, 0]
    assert st_.score.tolist() == [0, 2, 2]

    st_ = compute_scores(star3)
    update_scores(st_, star3, 3)
    assert st_.deg.tolist() == [2, 1, 1, 0]
    assert st_.codeg_sum.tolist() == [0, 1, 1, 0]
    assert st_.score.tolist() == [8, 6, 6, 0]


def test_update_dead_vertex(path3):
    st_ = compute_scores(path3)
    update_scores(st_, path3, 0)
    with pytest.raises(StateError):
        update_scores(st_, path3, 0)


def assert_matches_recompute(st_, g, dead):
    h = remove_vertices(g, dead)
    fresh = compute_scores(h)
    for mine, ref in zip(st_.tables(), fresh.tables()):
        assert np.array_equal(mine[h.parent_index], ref)
        assert not mine[dead].any()


def test_update_recompute_equivalence():
    rng = np.random.default_rng(99)
    for g in random_graphs(100, 64, seed=99, n_min=2, probs=(0.05, 0.15, 0.4)):
        st_ = compute_scores(g)
        dead = []
        for v in rng.permutation(g.n)[: min(g.n, 10)].tolist():
            update_scores(st_, g, v)
            dead.append(v)
            assert_matches_recompute(st_, g, dead)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 40), st.floats(0.02, 0.6))
def test_update_recompute_equivalence_property(seed, n, p):
    g = gnp(n, p, seed)
    st_ = compute_scores(g)
    dead = []
    for v in np.random.default_rng(seed).permutation(n).tolist():
        update_scores(st_, g, v)
        dead.append(v)
        assert_matches_recompute(st_, g, dead)


def test_scores_never_increase():
    g = gnp(50, 0.2, 7)
    st_ = compute_scores(g)
    prev = st_.score.copy()
    for v in range(0, 50, 3):
        update_scores(st_, g, v)
        assert np.all(st_.score <= prev)
        prev = st_.score.copy()


def test_pop_max_lowest_index_on_ties(star3):
    st_ = compute_scores(star3)
    assert st_.pop_max() == 0


def test_pop_max_skips_stale_entries():
    g = path_graph(5)
    st_ = compute_scores(g)
    assert st_.score.tolist() == [6, 12, 24, 12, 6]
    assert st_.pop_max() == 2
    update_scores(st_, g, 2)
    # heap still holds 12 for vertices 1 and 3; all survivors now score 2
    assert st_.score.tolist() == [2, 2, 0, 2, 2]
    assert st_.pop_max() == 0


def test_cauchy_schwarz_sandwich():
    for g in random_graphs(60, 20, seed=12):
        for v in range(g.n):
            cod = np.array([codegree(g, u, v) for u in range(g.n) if u != v], dtype=np.int64)
            s1, s2 = int(cod.sum()), int((cod ** 2).sum())
            assert s1 * s1 <= g.n * s2
            assert s2 <= s1 * s1
            assert 4 * s1 * s1 >= 4 * s2


def test_score_bounds_cw4():
    for g in random_graphs(60, 12, seed=13):
        sc = compute_scores(g).score
        assert all(sc[v] >= cw4_vertex(g, v) for v in range(g.n))


def test_submodularity_sample():
    rng = np.random.default_rng(77)
    graphs = list(random_graphs(40, 9, seed=77, n_min=3))
    for _ in range(200):
        g = graphs[int(rng.integers(len(graphs)))]
        perm = rng.permutation(g.n).tolist()
        z = perm[-1]
        y_size = int(rng.integers(0, g.n))
        x_size = int(rng.integers(0, y_size + 1))
        X, Y = perm[:x_size], perm[:y_size]
        gain_x = gp_set(g, X + [z], 4) - gp_set(g, X, 4)
        gain_y = gp_set(g, Y + [z], 4) - gp_set(g, Y, 4)
        assert gp_set(g, X, 4) >= 0
        assert gp_set(g, Y, 4) >= gp_set(g, X, 4)
        assert gain_x >= gain_y >= 0
