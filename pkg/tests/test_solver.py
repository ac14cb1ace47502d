import random

import numpy as np
import pytest

from conftest import small_random
from ptmaxcut.errors import BadParameters, SubsetNotContained
from ptmaxcut.generators import obs6_tree, odd_clique
from ptmaxcut.graph import WeightedGraph, cut_weight, msf_weight
from ptmaxcut.oracle import brute_max_cut
from ptmaxcut.reduction import reduce
from ptmaxcut.solver import (
    BOUND,
    ENUMERATED,
    Instance,
    _Enumeration,
    combine_subset,
    decide,
    decide_k,
    decide_target,
    max_cut,
    solve,
    solve_k,
)
from ptmaxcut.ucf import solve_ucf

K3 = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def test_decide_examples():
    assert decide(K3, 0).answer
    assert not decide(K3, 4).answer
    tree = obs6_tree(4)
    assert decide(tree, 8).answer
    assert not decide(tree, 9).answer


def test_decide_target_examples():
    K5 = odd_clique(2)
    assert decide_target(K5, 6).answer
    assert not decide_target(K5, 7).answer
    assert decide_target(K3, 0).answer
    with pytest.raises(BadParameters):
        decide_target(K3, -1)


def test_solve_examples():
    path = obs6_tree(2)
    # target 2*4 + 4 + 8 = 20 quarters, but the path only has weight 4
    assert not solve(path, 8).answer
    v = solve(path, 4)
    assert v.answer and v.witness.side1 == {1} and v.witness.weight == 4
    v = solve(K3, 4)
    assert not v.answer and v.witness is None
    v = solve(WeightedGraph.from_edges(3, []), 0)
    assert v.answer and v.witness.weight == 0 and v.witness.side1 == frozenset()


def test_nonpositive_k_never_enumerates():
    for k in (-8, -1, 0):
        assert decide(odd_clique(3), k).path == BOUND


def test_combine_subset_examples():
    star = WeightedGraph.from_edges(3, [(0, 1, 1), (0, 2, 1)])
    vw, base = combine_subset(star, {0}, {0})
    assert vw.w0[1:].tolist() == [1, 1] and vw.w1[1:].tolist() == [0, 0] and base == 0
    vw, base = combine_subset(star, {0}, set())
    assert vw.w0.tolist() == [0, 0, 0] and vw.w1[1:].tolist() == [1, 1] and base == 0
    vw, base = combine_subset(K3, {0, 1}, {0})
    assert (vw.w0[2], vw.w1[2], base) == (1, 1, 1)
    H = K3.without([0, 1])
    assert base + solve_ucf(H, vw)[0] == 2 == brute_max_cut(K3).value
    with pytest.raises(SubsetNotContained):
        combine_subset(K3, {0}, {1})


def test_subset_maximum_equals_oracle():
    rng = random.Random(9)
    for _ in range(150):
        G = small_random(rng)
        S = reduce(G, 0, "full").S
        H = G.without(S)
        Sl = sorted(S)
        best = max(
            base + solve_ucf(H, vw)[0]
            for mask in range(1 << len(Sl))
            for vw, base in [combine_subset(G, S, {s for i, s in enumerate(Sl) if mask >> i & 1})]
        )
        assert best == brute_max_cut(G).value


def test_decide_and_solve_against_oracle():
    rng = random.Random(10)
    for _ in range(150):
        G = small_random(rng)
        mu = brute_max_cut(G).value
        for k in (-4, 0, 1, 2, 3, 4, 6, 8, 12, 16, 20, 24):
            target = Instance(G, k).target_quarters
            want = 4 * mu >= target
            d, s = decide(G, k), solve(G, k)
            assert d.answer == want == s.answer
            if s.witness is not None:
                assert s.witness.weight == cut_weight(G, s.witness.side1)
                assert 4 * s.witness.weight >= target


def test_monotone_in_k():
    rng = random.Random(12)
    for _ in range(60):
        G = small_random(rng)
        answers = [decide(G, k).answer for k in range(-2, 25)]
        # once no, always no
        assert answers == sorted(answers, reverse=True)


def test_integer_wrappers():
    assert decide_k(obs6_tree(8), 4).answer and not decide_k(obs6_tree(8), 5).answer
    assert solve_k(obs6_tree(8), 4).witness.weight == 16


def test_max_cut_is_exact():
    rng = random.Random(13)
    for _ in range(100):
        G = small_random(rng, 1, 12)
        assert max_cut(G).weight == brute_max_cut(G).value


def test_threaded_enumeration_is_deterministic():
    rng = np.random.default_rng(0)
    # dense random graphs keep the marked set large enough to split
    n = 16
    edges = [(u, v, int(rng.integers(1, 4))) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
    G = WeightedGraph.from_edges(n, edges)
    enum = _Enumeration(G, reduce(G, 0, "full").S)
    assert len(enum.S) >= 8
    assert enum.run(0, False, 1) == enum.run(0, False, 4)
    assert solve(G, 1, workers=3).witness == solve(G, 1).witness


def test_disconnected_input():
    G = WeightedGraph.from_edges(7, [(0, 1, 2), (1, 2, 2), (0, 2, 2), (4, 5, 1), (5, 6, 3)])
    mu = brute_max_cut(G).value
    for k in range(0, 12):
        assert decide(G, k).answer == (4 * mu >= Instance(G, k).target_quarters)
    assert decide(G, 5).path in (BOUND, ENUMERATED)


def test_a_rule_step_buys_one_quarter_only():
    # one Rule 6 step on the unit 5-cycle; mu = 4 sits just 2 quarters above the bound
    C5 = WeightedGraph.from_edges(5, [(u, (u + 1) % 5, 1) for u in range(5)])
    out = reduce(C5, 4, "decide")
    assert out.trace[0].rule_id == 6 and out.k_remaining_quarters > 0
    assert decide(C5, 2).answer and not decide(C5, 4).answer
