"""Instance families: witness graphs for the bound, random graphs, and a
gallery of small graphs on which a chosen reduction rule fires first."""

from __future__ import annotations

import random

import numpy as np

from .errors import BadParameters
from .graph import WeightedGraph, normalize_multigraph


def _positive(**params):
    for name, val in params.items():
        if not isinstance(val, (int, np.integer)) or val < 1:
            raise BadParameters(f"{name} must be a positive integer, got {val!r}")


def obs6_tree(i: int) -> WeightedGraph:
    """Path on ``i + 1`` vertices with every edge of weight 2."""
    _positive(i=i)
    return WeightedGraph.from_edges(i + 1, [(j, j + 1, 2) for j in range(i)])


def odd_clique(t: int) -> WeightedGraph:
    """Unit-weight clique on ``2t + 1`` vertices."""
    _positive(t=t)
    n = 2 * t + 1
    return WeightedGraph.from_edges(n, [(u, v, 1) for u in range(n) for v in range(u + 1, n)])


def random_graph(n: int, m: int, wmax: int, seed: int) -> WeightedGraph:
    """Connected simple graph: a random spanning tree plus ``m - n + 1`` extra edges."""
    _positive(n=n, wmax=wmax)
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise BadParameters(f"m={m} impossible for a connected simple graph on {n} vertices")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    if n > 1:
        parent = (rng.random(n - 1) * np.arange(1, n)).astype(np.int64)
        tu, tv = perm[1:], perm[parent]
    else:
        tu = tv = np.zeros(0, dtype=np.int64)
    lo, hi = np.minimum(tu, tv), np.maximum(tu, tv)
    keys = np.unique(lo * n + hi)
    while len(keys) < m:
        want = 2 * (m - len(keys)) + 16
        a = rng.integers(0, n, want)
        b = rng.integers(0, n, want)
        ok = a != b
        a, b = a[ok], b[ok]
        new = np.minimum(a, b) * n + np.maximum(a, b)
        new = new[~np.isin(new, keys)]
        _, first = np.unique(new, return_index=True)
        new = new[np.sort(first)][: m - len(keys)]
        keys = np.concatenate([keys, new])
    keys = np.sort(keys)
    w = rng.integers(1, wmax + 1, len(keys))
    return WeightedGraph(n, keys // n, keys % n, w)


def ucf(blocks: int, maxblock: int, wmax: int, seed: int) -> WeightedGraph:
    """Random connected uniform-clique-forest built by gluing cliques at vertices."""
    _positive(blocks=blocks, wmax=wmax)
    if maxblock < 2:
        raise BadParameters("maxblock must be at least 2")
    rng = random.Random(seed)
    n = 1
    edges = []
    for _ in range(blocks):
        size = rng.randint(2, maxblock)
        c = rng.randint(1, wmax)
        members = [rng.randrange(n)] + list(range(n, n + size - 1))
        n += size - 1
        edges += [(u, v, c) for i, u in enumerate(members) for v in members[i + 1:]]
    return WeightedGraph.from_edges(n, edges)


def _clique(vs, w):
    return [(u, v, w) for i, u in enumerate(vs) for v in vs[i + 1:]]


def rule_gallery(rule_id: int, seed: int = 0) -> WeightedGraph:
    """A small graph whose first reduction step uses rule ``rule_id``.

    The seed varies weights and sizes; the shape is fixed per rule.
    """
    if rule_id not in range(1, 9):
        raise BadParameters(f"rule id must be 1..8, got {rule_id!r}")
    rng = random.Random(seed * 8 + rule_id)
    c = rng.randint(1, 4)
    if rule_id == 1:
        # clique, one heavier edge away from vertex 0
        s = rng.randint(4, 6)
        edges = _clique(list(range(s)), c)
        edges.append((1, 2, rng.randint(1, 3)))
        return normalize_multigraph(edges, s)
    if rule_id == 2:
        s = rng.randint(2, 6)
        return WeightedGraph.from_edges(s, _clique(list(range(s)), c))
    if rule_id == 3:
        # uniform clique on 1..s-1, vertex 0 joined to all with another weight
        s = rng.randint(3, 6)
        d = c + rng.randint(1, 3)
        edges = _clique(list(range(1, s)), c) + [(0, u, d) for u in range(1, s)]
        return WeightedGraph.from_edges(s, edges)
    if rule_id == 4:
        # uniform clique on 1..s-1, vertex 0 sees only part of it
        s = rng.randint(4, 7)
        seen = rng.randint(2, s - 2)
        edges = _clique(list(range(1, s)), c)
        edges += [(0, u, rng.randint(1, 5)) for u in range(1, seen + 1)]
        return WeightedGraph.from_edges(s, edges)
    if rule_id == 5:
        # clique on 1..s-1 uniform except a heavy edge {1,2}; 0 sees only 1 and 2,
        # never more lightly than c, or a Rule 1 triple shows up first
        s = rng.randint(5, 8)
        edges = _clique(list(range(1, s)), c)
        edges.append((1, 2, rng.randint(1, 4)))
        edges += [(0, 1, rng.randint(c, c + 4)), (0, 2, rng.randint(c, c + 4))]
        return normalize_multigraph(edges, s)
    if rule_id == 6:
        # cycle on five vertices
        return WeightedGraph.from_edges(5, [(u, (u + 1) % 5, c) for u in range(5)])
    if rule_id == 7:
        # path 0-1-2 of weight c, vertex 3 joined to all three by heavy edges,
        # and a triangle hanging off 3 so that 3 is the cut vertex
        heavy = [2 * c + rng.randint(0, 3) for _ in range(3)]
        edges = [(0, 1, c), (1, 2, c), (0, 3, heavy[0]), (2, 3, heavy[1]), (1, 3, heavy[2])]
        tail = rng.randint(1, 5)
        edges += _clique([3, 4, 5], tail)
        return WeightedGraph.from_edges(6, edges)
    # rule 8: uniform clique on 1..s-1 minus edge {1, s-1}; 0 sees exactly 1 and s-1
    s = rng.randint(4, 7)
    edges = [e for e in _clique(list(range(1, s)), c) if (e[0], e[1]) != (1, s - 1)]
    edges += [(0, 1, rng.randint(1, 5)), (0, s - 1, rng.randint(1, 5))]
    return WeightedGraph.from_edges(s, edges)


FAMILIES = ("obs6-tree", "odd-clique", "random", "ucf", "rule-gallery")


def generate(family: str, **params) -> WeightedGraph:
    if family == "obs6-tree":
        return obs6_tree(params["i"])
    if family == "odd-clique":
        return odd_clique(params["t"])
    if family == "random":
        return random_graph(params["n"], params["m"], params.get("wmax", 1), params.get("seed", 0))
    if family == "ucf":
        return ucf(params["blocks"], params.get("maxblock", 4), params.get("wmax", 1), params.get("seed", 0))
    if family == "rule-gallery":
        return rule_gallery(params["rule"], params.get("seed", 0))
    raise BadParameters(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
