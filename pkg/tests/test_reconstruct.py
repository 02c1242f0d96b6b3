from itertools import combinations

import pytest

from p2pack import (InputError, enumerate_packings, ensure_valid_packing,
                    gen_gnp, packing_from_endpoint_pairs,
                    packing_from_midpoints)

from conftest import graph, path_graph


def test_midpoints_single_path():
    g = path_graph(3)
    pk = packing_from_midpoints(g, {1})
    assert pk is not None and pk.paths[0].vertices == (0, 1, 2)


def test_midpoints_adjacent_pair_on_four_path():
    # two midpoints need four distinct endpoints; only two other vertices exist
    assert packing_from_midpoints(path_graph(4), {1, 2}) is None


def test_midpoints_empty_set():
    pk = packing_from_midpoints(path_graph(3), set())
    assert pk is not None and pk.size == 0


def test_endpoint_pair_in_triangle():
    g = graph(3, [(0, 2), (1, 2), (0, 1)])
    pk = packing_from_endpoint_pairs(g, [(0, 1)])
    assert pk is not None and pk.paths[0].mid == 2


def test_endpoint_pair_without_common_neighbor():
    g = path_graph(4)
    assert packing_from_endpoint_pairs(g, [(0, 3)]) is None


def test_endpoint_pairs_reject_duplicates():
    g = path_graph(5)
    with pytest.raises(InputError):
        packing_from_endpoint_pairs(g, [(0, 2), (2, 4)])
    with pytest.raises(InputError):
        packing_from_endpoint_pairs(g, [(1, 1)])


def test_matches_exhaustive_search_on_random_graphs():
    for seed in range(12):
        g = gen_gnp(8 + seed % 3, 0.35, 100 + seed)
        for size in (1, 2):
            realizable_mids = set()
            realizable_ends = set()
            for pk in enumerate_packings(g, size):
                realizable_mids.add(frozenset(q.mid for q in pk.paths))
                realizable_ends.add(
                    frozenset(frozenset((q.e1, q.e2)) for q in pk.paths))
            for mids in combinations(range(g.n), size):
                got = packing_from_midpoints(g, mids)
                assert (got is not None) == (frozenset(mids) in realizable_mids)
                if got is not None:
                    ensure_valid_packing(g, got)
                    assert frozenset(q.mid for q in got.paths) == frozenset(mids)
            for pairs in combinations(combinations(range(g.n), 2), size):
                flat = [v for pr in pairs for v in pr]
                if len(set(flat)) != len(flat):
                    continue
                got = packing_from_endpoint_pairs(g, list(pairs))
                want = frozenset(frozenset(pr) for pr in pairs) in realizable_ends
                assert (got is not None) == want
                if got is not None:
                    ensure_valid_packing(g, got)
