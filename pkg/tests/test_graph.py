import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptmaxcut.errors import NonPositiveWeight, SelfLoop, VertexOutOfRange, WeightOverflow
from ptmaxcut.generators import obs6_tree, odd_clique, random_graph
from ptmaxcut.graph import (
    WeightedGraph,
    block_cut_forest,
    cut_weight,
    edwards_erdos_quarters,
    msf_weight,
    normalize_multigraph,
    poljak_turzik_quarters,
)
from ptmaxcut.oracle import brute_max_cut

K3 = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
PATH31 = WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 1)])
BOWTIE = WeightedGraph.from_edges(5, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (2, 4, 1)])


def test_parallel_edges_are_summed():
    G = normalize_multigraph([(0, 1, 1), (0, 1, 2)])
    assert G.edges() == [(0, 1, 3)]


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        normalize_multigraph([(0, 0, 1)])


def test_bad_weights_rejected():
    with pytest.raises(NonPositiveWeight):
        normalize_multigraph([(0, 1, 0)])
    with pytest.raises(WeightOverflow):
        normalize_multigraph([(0, 1, 2**32 + 1)])


def test_empty_edge_list():
    G = normalize_multigraph([], n=3)
    assert G.order == 3 and G.m == 0


def test_cut_weight_examples():
    assert cut_weight(K3, {0}) == 2
    assert cut_weight(K3, set()) == 0
    assert cut_weight(PATH31, {1}) == 4
    with pytest.raises(VertexOutOfRange):
        cut_weight(K3, {5})


def test_msf_examples():
    assert msf_weight(K3) == 2
    assert msf_weight(WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])) == 3
    assert msf_weight(WeightedGraph.from_edges(4, [(0, 1, 1), (2, 3, 1)])) == 2
    assert msf_weight(WeightedGraph.from_edges(3, [])) == 0


def test_bound_examples():
    assert poljak_turzik_quarters(K3).quarters == 8
    assert poljak_turzik_quarters(odd_clique(2)).quarters == 24
    assert poljak_turzik_quarters(obs6_tree(4)).quarters == 24
    assert edwards_erdos_quarters(obs6_tree(4)).quarters == 20
    assert edwards_erdos_quarters(odd_clique(2)).quarters == 24
    assert edwards_erdos_quarters(WeightedGraph.from_edges(3, [])).quarters == 0
    assert str(poljak_turzik_quarters(odd_clique(2))) == "24/4 (=6)"


def test_block_cut_forest_examples():
    f = block_cut_forest(PATH31)
    assert set(f.blocks) == {frozenset({0, 1}), frozenset({1, 2})}
    assert f.cut_vertices == {1}
    f = block_cut_forest(K3)
    assert f.blocks == (frozenset({0, 1, 2}),) and not f.cut_vertices
    f = block_cut_forest(BOWTIE)
    assert len(f.blocks) == 2 and f.cut_vertices == {2}


def test_isolated_vertices_are_singleton_blocks():
    G = WeightedGraph.from_edges(4, [(0, 1, 1)])
    f = block_cut_forest(G)
    assert frozenset({2}) in f.blocks and frozenset({3}) in f.blocks
    assert set(f.leaf_blocks) == set(range(len(f.blocks)))


def test_blocks_partition_edges():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 12)
        G = random_graph(n, rng.randint(n - 1, n * (n - 1) // 2), 4, rng.randrange(10**6))
        f = block_cut_forest(G)
        assert sum(f.block_edge_counts) == G.m
        per_vertex = {}
        for b in f.blocks:
            for u in b:
                per_vertex[u] = per_vertex.get(u, 0) + 1
        assert f.cut_vertices == {u for u, c in per_vertex.items() if c >= 2}
        # each edge lies inside exactly one block
        for u, v, _ in G.edges():
            assert sum(1 for b in f.blocks if u in b and v in b) == 1


def test_pt_bound_holds_on_small_graphs():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 12)
        G = random_graph(n, rng.randint(n - 1, n * (n - 1) // 2), 6, rng.randrange(10**6))
        assert 4 * brute_max_cut(G).value >= poljak_turzik_quarters(G).quarters


def test_unweighted_bounds_coincide():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 15)
        G = random_graph(n, rng.randint(n - 1, n * (n - 1) // 2), 1, rng.randrange(10**6))
        assert poljak_turzik_quarters(G) == edwards_erdos_quarters(G)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9), st.data())
def test_msf_relabel_invariant_and_cut_complement(n, data):
    edges = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 9))
        .filter(lambda e: e[0] != e[1]), max_size=20))
    G = normalize_multigraph(edges, n)
    perm = data.draw(st.permutations(range(n)))
    H = normalize_multigraph([(perm[u], perm[v], w) for u, v, w in reversed(edges)], n)
    assert msf_weight(G) == msf_weight(H)
    side = data.draw(st.sets(st.integers(0, n - 1)))
    assert cut_weight(G, side) == cut_weight(G, set(range(n)) - side)


def test_views_drop_vertices():
    G = odd_clique(2)
    H = G.without([0, 1])
    assert H.vertices == (2, 3, 4) and H.m == 3 and H.total_weight == 3
    assert G.induced([0, 1]).edges() == [(0, 1, 1)]
    assert np.array_equal(H.alive_mask(), np.array([0, 0, 1, 1, 1], dtype=H.alive_mask().dtype))
