import pytest

from p2pack import Graph, max_packing_dp


def graph(n, edges):
    return Graph.from_edges(n, edges)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture(scope="session")
def oracle_cache():
    """Memoized exact maximum packing size, shared across the session."""
    cache = {}

    def opt(g):
        key = hash(g)
        if key not in cache:
            cache[key] = max_packing_dp(g)[0]
        return cache[key]

    return opt
