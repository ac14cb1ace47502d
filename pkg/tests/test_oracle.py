import random

import pytest

from conftest import small_random
from ptmaxcut.errors import TooLarge
from ptmaxcut.generators import obs6_tree, odd_clique, random_graph
from ptmaxcut.graph import WeightedGraph, cut_weight, poljak_turzik_quarters
from ptmaxcut.oracle import assert_pt_bound, brute_max_cut

K3 = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def test_examples():
    assert brute_max_cut(K3).value == 2
    assert brute_max_cut(odd_clique(2)).value == 6
    assert brute_max_cut(WeightedGraph.from_edges(2, [(0, 1, 7)])).value == 7
    assert brute_max_cut(WeightedGraph.from_edges(0, [])).value == 0


def test_smallest_vertex_stays_out_and_ties_are_lexicographic():
    res = brute_max_cut(K3)
    assert res.cut.side1 == {1}
    res = brute_max_cut(odd_clique(2))
    assert 0 not in res.cut.side1 and res.cut.side1 == {1, 2}


def test_pt_bound_examples():
    assert assert_pt_bound(odd_clique(2))
    assert 4 * brute_max_cut(odd_clique(2)).value == poljak_turzik_quarters(odd_clique(2)).quarters
    tree = obs6_tree(4)
    assert assert_pt_bound(tree)
    assert 4 * brute_max_cut(tree).value - poljak_turzik_quarters(tree).quarters == 8
    assert assert_pt_bound(WeightedGraph.from_edges(3, []))


def test_pt_bound_on_many_seeds():
    for seed in range(1000):
        rng = random.Random(seed)
        assert assert_pt_bound(small_random(rng, 1, 12, 6))


def test_invariances():
    rng = random.Random(7)
    for _ in range(100):
        G = small_random(rng, 2, 10)
        res = brute_max_cut(G)
        assert res.value == cut_weight(G, res.cut.side1)
        perm = list(range(G.n))
        rng.shuffle(perm)
        H = WeightedGraph.from_edges(G.n, [(perm[u], perm[v], w) for u, v, w in G.edges()])
        assert brute_max_cut(H).value == res.value
        assert cut_weight(G, set(G.vertices) - res.cut.side1) == res.value


def test_bipartite_graphs_cut_everything():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(2, 12)
        # trees are bipartite
        G = random_graph(n, n - 1, 9, rng.randrange(10**6))
        assert brute_max_cut(G).value == G.total_weight


def test_size_guard():
    with pytest.raises(TooLarge):
        brute_max_cut(WeightedGraph.from_edges(25, []))
