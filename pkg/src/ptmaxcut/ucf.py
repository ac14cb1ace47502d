"""Max cut with vertex bonuses on graphs whose blocks are uniform cliques.

The solver peels leaf blocks bottom-up through the block-cut tree. For a
block ``X | {v}`` with edge weight ``c`` it sorts ``X`` by ``w1 - w0``; the
best cut puts a prefix of that order on side 1, so both placements of ``v``
are resolved by scanning the prefixes, and the two optima are folded into
the bonuses of ``v``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NotUCF, TooLarge
from .graph import Cut, WeightedGraph, group_blocks

BRUTE_LIMIT = 22


@dataclass(frozen=True)
class VertexWeights:
    """Side bonuses: ``w0[v]`` if ``v`` stays out of the cut set, ``w1[v]`` if in.

    Both are int64 arrays indexed by vertex id (length ``G.n``).
    """

    w0: np.ndarray
    w1: np.ndarray

    def __post_init__(self):
        w0 = np.ascontiguousarray(self.w0, dtype=np.int64)
        w1 = np.ascontiguousarray(self.w1, dtype=np.int64)
        if w0.shape != w1.shape:
            raise ValueError("w0 and w1 must have the same length")
        if (w0 < 0).any() or (w1 < 0).any():
            raise ValueError("vertex bonuses must be nonnegative")
        object.__setattr__(self, "w0", w0)
        object.__setattr__(self, "w1", w1)

    @classmethod
    def zeros(cls, n: int) -> "VertexWeights":
        return cls(np.zeros(n, np.int64), np.zeros(n, np.int64))

    @classmethod
    def from_maps(cls, n: int, w0: dict, w1: dict) -> "VertexWeights":
        a0 = np.zeros(n, np.int64)
        a1 = np.zeros(n, np.int64)
        for v, x in w0.items():
            a0[v] = x
        for v, x in w1.items():
            a1[v] = x
        return cls(a0, a1)


def objective(G: WeightedGraph, vw: VertexWeights, side1) -> int:
    """Cut weight plus the bonus of every vertex of ``G`` on its side."""
    from .graph import cut_weight

    side1 = set(side1)
    total = cut_weight(G, side1)
    for v in G.vertices:
        total += int(vw.w1[v]) if v in side1 else int(vw.w0[v])
    return total


@dataclass(frozen=True)
class PeelPlan:
    """Blocks in peel order (children before parents) and component roots."""

    blk_v: np.ndarray
    blk_c: np.ndarray
    blk_ptr: np.ndarray
    blk_x: np.ndarray
    roots: np.ndarray

    @property
    def nblocks(self) -> int:
        return len(self.blk_v)

    def block(self, b):
        return int(self.blk_v[b]), int(self.blk_c[b]), self.blk_x[self.blk_ptr[b]:self.blk_ptr[b + 1]]


def build_plan(G: WeightedGraph, check: bool = True) -> PeelPlan:
    """Peel plan of a uniform-clique-forest; raises :class:`NotUCF` otherwise."""
    indptr, nbr, eid, _ = G.csr
    eb, nb, _ = kernels.biconnected(indptr, nbr, eid, G.alive_mask(), np.zeros(0, np.int64), G.m)
    members, ecount = group_blocks(eb, nb, G.eu, G.ev)
    weight = np.zeros(nb, dtype=np.int64)
    if G.m:
        lo = np.full(nb, np.iinfo(np.int64).max, dtype=np.int64)
        hi = np.zeros(nb, dtype=np.int64)
        np.minimum.at(lo, eb, G.ew)
        np.maximum.at(hi, eb, G.ew)
        if check and not np.array_equal(lo, hi):
            raise NotUCF("a block has edges of different weights")
        weight = hi
        if check and any(ne != len(mb) * (len(mb) - 1) // 2 for mb, ne in zip(members, ecount)):
            raise NotUCF("a block is not a clique")

    blocks_of = defaultdict(list)
    for b, mb in enumerate(members):
        for u in mb.tolist():
            blocks_of[u].append(b)

    order = []  # (block, parent vertex)
    roots = []
    done = np.zeros(len(members), dtype=bool)
    covered = np.zeros(G.n, dtype=bool)
    for r in G.vertices:
        if covered[r]:
            continue
        # the smallest vertex of each component is its root
        roots.append(r)
        covered[r] = True
        todo = deque()
        for b in blocks_of.get(r, ()):
            done[b] = True
            todo.append((b, r))
        while todo:
            b, pv = todo.popleft()
            order.append((b, pv))
            for u in members[b].tolist():
                if u == pv:
                    continue
                covered[u] = True
                for b2 in blocks_of[u]:
                    if not done[b2]:
                        done[b2] = True
                        todo.append((b2, u))
    order.reverse()
    blk_v = np.array([pv for _, pv in order], dtype=np.int64)
    blk_c = np.array([weight[b] for b, _ in order], dtype=np.int64)
    xs = [members[b][members[b] != pv] for b, pv in order]
    blk_ptr = np.zeros(len(order) + 1, dtype=np.int64)
    if xs:
        blk_ptr[1:] = np.cumsum([len(x) for x in xs])
        blk_x = np.concatenate(xs).astype(np.int64)
    else:
        blk_x = np.zeros(0, dtype=np.int64)
    return PeelPlan(blk_v, blk_c, blk_ptr, blk_x, np.array(roots, dtype=np.int64))


def _peel(plan: PeelPlan, w0, w1):
    """Fold every block; returns per-block ``(order, p if v on 0, p if v on 1)``."""
    choices = []
    for b in range(plan.nblocks):
        v, c, xs = plan.block(b)
        xs = sorted(xs.tolist(), key=lambda x: (w0[x] - w1[x], x))
        k = len(xs)
        acc = sum(w0[x] for x in xs)
        out0, p0 = w0[v] + acc, 0
        out1, p1 = w1[v] + acc + c * k, 0
        for p in range(1, k + 1):
            x = xs[p - 1]
            acc += w1[x] - w0[x]
            val0 = w0[v] + acc + c * p * (k - p + 1)
            val1 = w1[v] + acc + c * (p + 1) * (k - p)
            if val0 > out0:
                out0, p0 = val0, p
            if val1 > out1:
                out1, p1 = val1, p
        w0[v] = out0
        w1[v] = out1
        choices.append((xs, p0, p1))
    return choices


def solve_with_plan(plan: PeelPlan, vw: VertexWeights):
    """``(value, side1 set)`` for a prepared plan."""
    w0 = vw.w0.tolist()
    w1 = vw.w1.tolist()
    choices = _peel(plan, w0, w1)
    side = {}
    value = 0
    for r in plan.roots.tolist():
        if w0[r] >= w1[r]:
            value += w0[r]
            side[r] = 0
        else:
            value += w1[r]
            side[r] = 1
    for b in range(plan.nblocks - 1, -1, -1):
        v = int(plan.blk_v[b])
        xs, p0, p1 = choices[b]
        p = p1 if side[v] else p0
        for i, x in enumerate(xs):
            side[x] = 1 if i < p else 0
    return value, frozenset(u for u, s in side.items() if s)


def solve_ucf(G: WeightedGraph, vw: VertexWeights | None = None):
    """Exact max of ``w(C) + sum of w1 over C + sum of w0 outside C``.

    Returns ``(value, Cut)``; raises :class:`NotUCF` if some block is not a
    uniform clique.
    """
    if vw is None:
        vw = VertexWeights.zeros(G.n)
    plan = build_plan(G)
    value, side1 = solve_with_plan(plan, vw)
    return value, Cut.of(G, side1)


def brute_maxcut_vertex_weights(G: WeightedGraph, vw: VertexWeights | None = None):
    """Exhaustive reference for :func:`solve_ucf`; ties go to the
    lexicographically smallest side-1 set."""
    verts = G.vertices
    if len(verts) > BRUTE_LIMIT:
        raise TooLarge(f"{len(verts)} vertices exceeds the limit of {BRUTE_LIMIT}")
    if vw is None:
        vw = VertexWeights.zeros(G.n)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [[] for _ in range(n)]
    for u, v, w in G.edges():
        adj[idx[u]].append((idx[v], w))
        adj[idx[v]].append((idx[u], w))
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adj])
    nbr = np.array([j for a in adj for j, _ in a], dtype=np.int64)
    wts = np.array([w for a in adj for _, w in a], dtype=np.int64)
    w0 = np.array([vw.w0[v] for v in verts], dtype=np.int64)
    w1 = np.array([vw.w1[v] for v in verts], dtype=np.int64)
    value, mask = kernels.gray_maxcut(n, indptr, nbr, wts, w0, w1, False)
    side1 = frozenset(verts[i] for i in range(n) if mask >> i & 1)
    return value, Cut.of(G, side1)
