import random

from hypothesis import given, settings, strategies as st

from p2pack import BipartiteGraph, alternating_reachable, max_matching


def brute_force_max(b):
    """Try every assignment of left vertices; exponential but exact."""

    def rec(u, used):
        if u == b.left_count:
            return 0
        best = rec(u + 1, used)
        for v in b.edges[u]:
            if v not in used:
                used.add(v)
                best = max(best, 1 + rec(u + 1, used))
                used.remove(v)
        return best

    return rec(0, set())


def random_bipartite(rng, left, right, p):
    rows = [[v for v in range(right) if rng.random() < p] for _ in range(left)]
    return BipartiteGraph.build(left, right, rows)


def test_complete_bipartite_2x2():
    b = BipartiteGraph.build(2, 2, [[0, 1], [0, 1]])
    assert max_matching(b).size == 2


def test_many_left_one_right():
    b = BipartiteGraph.build(3, 1, [[0], [0], [0]])
    m = max_matching(b)
    assert m.size == 1
    assert m.pairs == {0: 0}  # lowest left id wins


def test_matches_brute_force_on_random_instances():
    rng = random.Random(42)
    for _ in range(120):
        b = random_bipartite(rng, rng.randint(0, 8), rng.randint(0, 8),
                             rng.choice([0.2, 0.4, 0.7]))
        m = max_matching(b)
        assert m.size == brute_force_max(b)
        # matching is injective and uses real edges
        assert len(set(m.pairs.values())) == m.size
        for u, v in m.pairs.items():
            assert v in b.edges[u]


def test_alternating_reachable_trivial():
    b = BipartiteGraph.build(2, 2, [[0], [0, 1]])
    m = max_matching(b)
    assert alternating_reachable(b, m, []) == (set(), set())


def test_alternating_reachable_one_step():
    # left 0 unmatched, its only neighbor is matched to left 1
    b = BipartiteGraph.build(2, 1, [[0], [0]])
    m = max_matching(b)
    unmatched = [u for u in range(2) if u not in m.pairs]
    left, right = alternating_reachable(b, m, unmatched)
    assert right == {0}
    assert left == {0, 1}


@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_no_augmenting_path_after_max_matching(seed):
    rng = random.Random(seed)
    b = random_bipartite(rng, rng.randint(1, 8), rng.randint(1, 8), 0.4)
    m = max_matching(b)
    sources = [u for u in range(b.left_count) if u not in m.pairs]
    left, right = alternating_reachable(b, m, sources)
    matched_right = set(m.pairs.values())
    assert right <= matched_right  # an unmatched reachable right vertex would augment
    # reachable set is a fixed point under one more alternation step
    left2, right2 = alternating_reachable(b, m, sorted(left))
    assert left2 == left and right2 == right
