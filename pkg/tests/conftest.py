import numpy as np
import pytest

from graphent.graph import Graph, is_connected


@pytest.fixture
def rng():
    return np.random.default_rng(20250809)


def random_connected(rng: np.random.Generator, n: int, extra: int | None = None) -> Graph:
    """Random connected graph: a random spanning tree plus extra edges."""
    edges = set()
    order = rng.permutation(n)
    for k in range(1, n):
        attach = order[rng.integers(0, k)]
        i, j = int(order[k]), int(attach)
        edges.add((min(i, j), max(i, j)))
    if extra is None:
        extra = int(rng.integers(0, n))
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    if candidates and extra:
        take = rng.choice(len(candidates), size=min(extra, len(candidates)), replace=False)
        edges.update(candidates[t] for t in take)
    g = Graph(n, frozenset(edges))
    assert is_connected(g)
    return g
