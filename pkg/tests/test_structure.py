import random

import pytest

from megset import (
    SizeCapExceededError,
    base_graph,
    build_graph,
    core_decomposition,
    feedback_edge_number,
    fes_meg_construction,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_tightness_family,
    is_meg_set,
    max_leaf_number,
    minimum_meg,
    random_connected,
    random_tree,
)

import oracles


def theta():
    return build_graph(5, [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])


def two_squares():
    # two 4-cycles sharing vertex 0
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)])


def test_feedback_edge_number_examples():
    assert feedback_edge_number(random_tree(9, 3)) == 0
    assert feedback_edge_number(gen_cycle(9)) == 1
    assert feedback_edge_number(gen_complete(4)) == 3


def test_feedback_edge_number_matches_bruteforce():
    rng = random.Random(13)
    for _ in range(15):
        n = rng.randint(2, 8)
        m = rng.randint(n - 1, min(12, n * (n - 1) // 2))
        g = random_connected(n, m, rng.randrange(10**9))
        assert feedback_edge_number(g) == oracles.fes_bruteforce(g)


def test_base_graph_cycle_with_tail():
    g = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6)])
    dec = base_graph(g)
    assert dec.base_vertices == frozenset(range(5))
    assert dec.base.m == 5
    assert dec.hanging_trees == [(0, frozenset({5, 6}))]


def test_base_graph_tree_is_all_hanging():
    t = random_tree(8, 5)
    dec = base_graph(t)
    assert dec.base_vertices == frozenset()
    assert dec.base.m == 0
    assert dec.hanging_trees == [(0, frozenset(range(8)))]


def test_core_decomposition_two_squares():
    dec = core_decomposition(two_squares())
    assert dec.core_vertices == frozenset({0})
    assert dec.proper_core_paths == []
    assert len(dec.core_cycles) == 2
    for walk in dec.core_cycles:
        assert walk[0] == walk[-1] == 0 and len(walk) == 5


def test_core_decomposition_theta():
    dec = core_decomposition(theta())
    assert dec.core_vertices == frozenset({0, 1})
    assert len(dec.proper_core_paths) == 3
    assert dec.core_cycles == []
    for path in dec.proper_core_paths:
        assert {path[0], path[-1]} == {0, 1} and len(path) == 3


def test_core_decomposition_k4():
    dec = core_decomposition(gen_complete(4))
    assert dec.core_vertices == frozenset(range(4))
    assert len(dec.proper_core_paths) == 6
    assert all(len(p) == 2 for p in dec.proper_core_paths)
    assert dec.core_cycles == []


def test_core_decomposition_single_cycle():
    dec = core_decomposition(gen_cycle(6))
    assert dec.core_vertices == frozenset()
    assert len(dec.core_cycles) == 1


def test_core_decomposition_rejects_forest():
    with pytest.raises(ValueError):
        core_decomposition(gen_path(5))


def test_fes_construction_tree_is_exactly_leaves():
    t = random_tree(9, 21)
    built = fes_meg_construction(t)
    leaves = frozenset(v for v in range(9) if t.degree(v) == 1)
    assert built.meg_set == leaves
    assert built.k == 0 and built.budget == len(leaves)


def test_fes_construction_single_cycle_with_tail():
    g = build_graph(8, [(i, (i + 1) % 7) for i in range(7)] + [(0, 7)])
    built = fes_meg_construction(g)
    assert built.k == 1
    assert len(built.meg_set) <= built.budget == 1 + 4
    assert is_meg_set(g, built.meg_set)


def test_fes_construction_theta():
    built = fes_meg_construction(theta())
    assert built.k == 2 and built.budget == 10
    assert is_meg_set(theta(), built.meg_set)
    assert len(built.meg_set) >= minimum_meg(theta()).meg_number


def test_fes_construction_random_graphs():
    rng = random.Random(37)
    for _ in range(20):
        n = rng.randint(6, 24)
        k = rng.randint(2, 5)
        m = n - 1 + k
        g = random_connected(n, m, rng.randrange(10**9))
        built = fes_meg_construction(g)
        assert built.k == k
        assert len(built.meg_set) <= built.budget
        assert is_meg_set(g, built.meg_set)
        dec = core_decomposition(g)
        assert len(dec.core_vertices) <= 2 * k - 2
        assert len(dec.proper_core_paths) + len(dec.core_cycles) <= 3 * k - 3
        assert len(dec.core_cycles) <= k


def test_max_leaf_number_examples():
    assert max_leaf_number(gen_cycle(5)) == 2
    assert max_leaf_number(gen_complete(4)) == 3
    assert max_leaf_number(gen_path(6)) == 2


def test_max_leaf_number_cap():
    with pytest.raises(SizeCapExceededError):
        max_leaf_number(gen_cycle(13))


def test_max_leaf_number_matches_spanning_tree_bruteforce():
    rng = random.Random(19)
    for _ in range(12):
        n = rng.randint(2, 7)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        g = random_connected(n, m, rng.randrange(10**9))
        assert max_leaf_number(g) == oracles.max_leaf_spanning_tree_bruteforce(g)


def test_fes_at_most_quadratic_in_max_leaf_number():
    # fes <= MLN does NOT hold in general (see the K5 test below); the
    # true relation is quadratic: non-tree edges of a max-leaf spanning
    # tree run between its leaves, so fes <= MLN*(MLN-1)/2
    rng = random.Random(29)
    for _ in range(15):
        n = rng.randint(3, 10)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        g = random_connected(n, m, rng.randrange(10**9))
        mln = max_leaf_number(g)
        assert feedback_edge_number(g) <= mln * (mln - 1) // 2


def test_fes_can_exceed_max_leaf_number():
    # counterexample to the linear claim, with equality in the quadratic one
    k5 = gen_complete(5)
    assert feedback_edge_number(k5) == 6
    assert max_leaf_number(k5) == 4


def test_tightness_family_shape():
    g = gen_tightness_family(2, 1)
    assert g.n == 8
    assert feedback_edge_number(g) == 2
    with pytest.raises(ValueError):
        gen_tightness_family(1, 0)


def test_tightness_family_optimum():
    assert minimum_meg(gen_tightness_family(2, 0)).meg_number == 6
    assert minimum_meg(gen_tightness_family(3, 2)).meg_number == 11
