import numpy as np
import pytest

from immunet.datasets import karate
from immunet.generators import complete_graph, gnp, path_graph, star_graph


def random_graphs(count, n_max, seed, n_min=1, probs=(0.3, 0.5, 0.7)):
    """Seeded G(n, p) instances cycling through ``probs``."""
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        yield gnp(n, probs[i % len(probs)], rng)


def count_closed_walks(g, p):
    """Total closed p-walks by depth-first enumeration from every start."""
    nbrs = [g.neighbors(v).tolist() for v in range(g.n)]

    def walks(start, cur, left):
        if left == 1:
            return int(start in nbrs[cur])
        return sum(walks(start, x, left - 1) for x in nbrs[cur])

    return sum(walks(s, s, p) for s in range(g.n))


@pytest.fixture
def path3():
    return path_graph(3)


@pytest.fixture
def star3():
    return star_graph(3)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def karate_graph():
    return karate()
