import pytest

from p2pack import (ContractViolation, P2Path, Packing, SolveStats,
                    apply_rule1, apply_rule2, check_properties,
                    classify_leftover, components_outside, gen_gnp,
                    greedy_maximal, reduce_exhaustive)

from conftest import graph, path_graph


def test_greedy_on_six_path():
    pk = greedy_maximal(path_graph(6), Packing.empty())
    assert [q.vertices for q in pk.paths] == [(0, 1, 2), (3, 4, 5)]


def test_greedy_triangle_and_edgeless():
    k3 = graph(3, [(0, 1), (1, 2), (0, 2)])
    assert greedy_maximal(k3, Packing.empty()).size == 1
    assert greedy_maximal(graph(4, []), Packing.empty()).size == 0


def test_greedy_keeps_base_and_is_maximal():
    g = path_graph(9)
    base = Packing.build([P2Path(3, 4, 5)])
    pk = greedy_maximal(g, base)
    assert base.paths[0] in pk.paths
    # maximality: every remaining component has at most 2 vertices
    assert all(len(c) <= 2 for c in components_outside(g, pk.covered))


def test_greedy_maximality_on_random_graphs():
    for seed in range(40):
        g = gen_gnp(6 + seed % 8, 0.35, seed)
        pk = greedy_maximal(g, Packing.empty())
        assert all(len(c) <= 2 for c in components_outside(g, pk.covered))


def test_classify_examples():
    g = path_graph(4)
    lc = classify_leftover(g, Packing.build([P2Path(0, 1, 2)]))
    assert lc.singletons == {3} and lc.pair_edges == ()
    g = path_graph(5)
    lc = classify_leftover(g, Packing.build([P2Path(1, 2, 3)]))
    assert lc.singletons == {0, 4}
    lc = classify_leftover(g, Packing.build([P2Path(0, 1, 2)]))
    assert lc.singletons == frozenset() and lc.pair_edges == ((3, 4),)


def test_classify_rejects_non_maximal():
    g = path_graph(6)
    with pytest.raises(ContractViolation):
        classify_leftover(g, Packing.empty())


def fig1_left():
    # packed path 1-2-3; lone vertices 4 (adj 1) and 5 (adj 2)
    return graph(6, [(1, 2), (2, 3), (1, 4), (2, 5)])


def fig1_right():
    return graph(6, [(1, 2), (2, 3), (1, 4), (3, 5)])


def fig2():
    # packed path 1-2-3; leftover edges {4,5} hooked at 1 and {6,7} hooked at 2
    return graph(8, [(1, 2), (2, 3), (4, 5), (1, 4), (6, 7), (2, 6)])


def test_rule1_midpoint_attachment():
    g = fig1_left()
    pk = Packing.build([P2Path(1, 2, 3)])
    out = apply_rule1(g, pk, classify_leftover(g, pk))
    new_pk, lc = out
    assert new_pk.path_set == {P2Path(5, 2, 3)}
    assert lc.pair_edges == ((1, 4),)
    assert new_pk.size == pk.size


def test_rule1_both_endpoints_attached():
    g = fig1_right()
    pk = Packing.build([P2Path(1, 2, 3)])
    new_pk, lc = apply_rule1(g, pk, classify_leftover(g, pk))
    assert new_pk.path_set == {P2Path(4, 1, 2)}
    assert lc.pair_edges == ((3, 5),)


def test_rule1_needs_two_lone_vertices():
    g = graph(5, [(1, 2), (2, 3), (1, 4)])
    pk = Packing.build([P2Path(1, 2, 3)])
    assert apply_rule1(g, pk, classify_leftover(g, pk)) is None


def test_rule2_splits_path():
    g = fig2()
    pk = Packing.build([P2Path(1, 2, 3)])
    new_pk, lc = apply_rule2(g, pk, classify_leftover(g, pk))
    assert new_pk.path_set == {P2Path(5, 4, 1), P2Path(7, 6, 2)}
    assert new_pk.size == pk.size + 1
    assert 3 in lc.singletons


def test_rule2_endpoint_attachments_free_midpoint():
    # leftover edges hang off both endpoints: the path midpoint is released
    g = graph(8, [(1, 2), (2, 3), (4, 5), (1, 4), (6, 7), (3, 6)])
    pk = Packing.build([P2Path(1, 2, 3)])
    new_pk, lc = apply_rule2(g, pk, classify_leftover(g, pk))
    assert new_pk.path_set == {P2Path(5, 4, 1), P2Path(7, 6, 3)}
    assert 2 in lc.singletons


def test_rule2_needs_distinct_attachments():
    # both leftover edges hang off the same path vertex
    g = graph(8, [(1, 2), (2, 3), (4, 5), (1, 4), (6, 7), (1, 6)])
    pk = Packing.build([P2Path(1, 2, 3)])
    assert apply_rule2(g, pk, classify_leftover(g, pk)) is None


def test_reduce_exhaustive_fixpoint_and_counts():
    g = fig1_left()
    pk = Packing.build([P2Path(1, 2, 3)])
    stats = SolveStats()
    reduced, lc = reduce_exhaustive(g, pk, stats=stats)
    assert stats.rule1 == 1 and stats.rule2 == 0
    assert check_properties(g, reduced, lc)

    g = fig2()
    pk = Packing.build([P2Path(1, 2, 3)])
    stats = SolveStats()
    reduced, lc = reduce_exhaustive(g, pk, stats=stats)
    assert reduced.size == 2
    assert check_properties(g, reduced, lc)


def test_reduce_exhaustive_idempotent():
    for seed in range(25):
        g = gen_gnp(9 + seed % 5, 0.3, seed)
        pk = greedy_maximal(g, Packing.empty())
        once, lc1 = reduce_exhaustive(g, pk)
        twice, lc2 = reduce_exhaustive(g, once)
        assert once == twice and lc1 == lc2
        assert check_properties(g, once, lc1)


def test_check_properties_violations():
    g = fig1_left()
    pk = Packing.build([P2Path(1, 2, 3)])
    assert not check_properties(g, pk, classify_leftover(g, pk))
    # no leftover at all: vacuously true
    g = path_graph(3)
    pk = Packing.build([P2Path(0, 1, 2)])
    assert check_properties(g, pk, classify_leftover(g, pk))
