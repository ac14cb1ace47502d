"""Exhaustive ground truth for small graphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import TooLarge
from .graph import Cut, WeightedGraph, poljak_turzik_quarters

ORACLE_LIMIT = 24


@dataclass(frozen=True)
class OracleResult:
    value: int
    cut: Cut


def brute_max_cut(G: WeightedGraph) -> OracleResult:
    """Maximum cut by Gray-code enumeration with the smallest vertex kept out.

    Among optimal cuts the lexicographically smallest side-1 set wins.
    """
    verts = G.vertices
    n = len(verts)
    if n > ORACLE_LIMIT:
        raise TooLarge(f"{n} vertices exceeds the oracle limit of {ORACLE_LIMIT}")
    if n == 0:
        return OracleResult(0, Cut(frozenset(), 0))
    idx = {v: i for i, v in enumerate(verts)}
    adj = [[] for _ in range(n)]
    for u, v, w in G.edges():
        adj[idx[u]].append((idx[v], w))
        adj[idx[v]].append((idx[u], w))
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adj])
    nbr = np.array([j for a in adj for j, _ in a], dtype=np.int64)
    wts = np.array([w for a in adj for _, w in a], dtype=np.int64)
    zero = np.zeros(n, dtype=np.int64)
    value, mask = kernels.gray_maxcut(n, indptr, nbr, wts, zero, zero, True)
    side1 = frozenset(verts[i] for i in range(n) if mask >> i & 1)
    cut = Cut.of(G, side1)
    assert cut.weight == value
    return OracleResult(int(value), cut)


def assert_pt_bound(G: WeightedGraph) -> bool:
    """Whether the maximum cut of ``G`` reaches the Poljak-Turzik bound."""
    return 4 * brute_max_cut(G).value >= poljak_turzik_quarters(G).quarters
