"""Weighted graphs, cuts, lower bounds and block-cut forests.

Vertices are integer ids in ``range(n)``. A graph may live on a subset of
that id space (``G.without(...)`` keeps the original ids), which lets cuts of
reduced graphs be compared with cuts of the graph they came from.

Every bound is returned as a :class:`QuarterBound`, i.e. the bound times four
as an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import NonPositiveWeight, SelfLoop, VertexOutOfRange, WeightOverflow

MAX_WEIGHT = 2**32

_EMPTY = np.zeros(0, dtype=np.int64)


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.flags.writeable = False
    return a


class WeightedGraph:
    """Simple undirected graph with positive integer edge weights.

    Edges are stored once as ``(u, v, w)`` with ``u < v``, sorted. Instances
    are immutable; derived structures (CSR adjacency, neighbour dicts) are
    built lazily and cached.
    """

    __slots__ = ("n", "eu", "ev", "ew", "_present", "_vertices", "_csr",
                 "_nbrs", "_total", "_edges")

    def __init__(self, n: int, eu, ev, ew, present=None):
        self.n = int(n)
        self.eu = _frozen(eu)
        self.ev = _frozen(ev)
        self.ew = _frozen(ew)
        if present is None:
            present = np.ones(self.n, dtype=np.uint8)
        else:
            present = np.ascontiguousarray(present, dtype=np.uint8).copy()
        present.flags.writeable = False
        self._present = present
        self._vertices = None
        self._csr = None
        self._nbrs = {}
        self._total = None
        self._edges = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "WeightedGraph":
        """Build from ``(u, v, w)`` triples; parallel edges are merged."""
        return normalize_multigraph(edges, n)

    def without(self, removed: Iterable[int]) -> "WeightedGraph":
        """The induced subgraph on ``V(G) - removed`` (ids preserved)."""
        present = self._present.copy()
        for u in removed:
            self._check_vertex(u)
            present[u] = 0
        return self._restrict(present)

    def induced(self, keep: Iterable[int]) -> "WeightedGraph":
        present = np.zeros(self.n, dtype=np.uint8)
        for u in keep:
            self._check_vertex(u)
            present[u] = 1
        return self._restrict(present)

    def _restrict(self, present):
        mask = (present[self.eu] & present[self.ev]).astype(bool)
        return WeightedGraph(self.n, self.eu[mask], self.ev[mask], self.ew[mask], present)

    # -- queries ----------------------------------------------------------

    @property
    def present(self) -> np.ndarray:
        """uint8 mask of the vertices that belong to the graph."""
        return self._present

    @property
    def vertices(self) -> tuple[int, ...]:
        if self._vertices is None:
            self._vertices = tuple(np.flatnonzero(self._present).tolist())
        return self._vertices

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.eu)

    @property
    def total_weight(self) -> int:
        if self._total is None:
            self._total = int(self.ew.sum())
        return self._total

    def has_vertex(self, u: int) -> bool:
        return 0 <= u < self.n and bool(self._present[u])

    def _check_vertex(self, u):
        if not (isinstance(u, (int, np.integer)) and 0 <= u < self.n and self._present[u]):
            raise VertexOutOfRange(f"vertex {u!r} is not in the graph")

    def edges(self) -> list[tuple[int, int, int]]:
        if self._edges is None:
            self._edges = list(zip(self.eu.tolist(), self.ev.tolist(), self.ew.tolist()))
        return self._edges

    @property
    def csr(self):
        """``(indptr, nbr, eid, wts)`` adjacency arrays over the full id space."""
        if self._csr is None:
            n, m = self.n, self.m
            src = np.concatenate([self.eu, self.ev])
            dst = np.concatenate([self.ev, self.eu])
            ids = np.concatenate([np.arange(m, dtype=np.int64)] * 2)
            order = np.lexsort((dst, src))
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
            nbr = dst[order]
            eid = ids[order]
            wts = np.concatenate([self.ew, self.ew])[order]
            self._csr = tuple(_frozen(a) for a in (indptr, nbr, eid, wts))
        return self._csr

    def neighbors(self, u: int) -> dict[int, int]:
        """``{neighbour: weight}`` for vertex ``u`` (shared cache, do not mutate)."""
        d = self._nbrs.get(u)
        if d is None:
            indptr, nbr, _, wts = self.csr
            a, b = indptr[u], indptr[u + 1]
            d = dict(zip(nbr[a:b].tolist(), wts[a:b].tolist()))
            self._nbrs[u] = d
        return d

    def weight(self, u: int, v: int) -> int:
        """Weight of edge ``{u, v}``, or 0 when absent."""
        return self.neighbors(u).get(v, 0)

    def degree(self, u: int) -> int:
        indptr = self.csr[0]
        return int(indptr[u + 1] - indptr[u])

    def alive_mask(self) -> np.ndarray:
        return self._present

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self._present, other._present)
                and np.array_equal(self.eu, other.eu) and np.array_equal(self.ev, other.ev)
                and np.array_equal(self.ew, other.ew))

    __hash__ = None

    def __repr__(self):
        return f"WeightedGraph(order={self.order}, m={self.m}, w={self.total_weight})"


def normalize_multigraph(raw_edges: Iterable[Sequence[int]], n: int | None = None) -> WeightedGraph:
    """Collapse a weighted multigraph edge list into a simple weighted graph.

    Parallel edges are merged by summing their weights. ``n`` defaults to one
    more than the largest endpoint id.

    >>> normalize_multigraph([(0, 1, 1), (0, 1, 2)]).edges()
    [(0, 1, 3)]
    """
    raw = [tuple(e) for e in raw_edges]
    if n is None:
        n = 1 + max((max(e[0], e[1]) for e in raw), default=-1)
    if n < 0:
        raise VertexOutOfRange("negative vertex count")
    for e in raw:
        if len(e) != 3:
            raise ValueError(f"edge {e!r} is not a (u, v, weight) triple")
        u, v, w = e
        for x in (u, v):
            if not isinstance(x, (int, np.integer)) or not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x!r} outside range(0, {n})")
        if u == v:
            raise SelfLoop(u)
        if not isinstance(w, (int, np.integer)) or w < 1:
            raise NonPositiveWeight(f"edge ({u}, {v}) has weight {w!r}; weights must be >= 1")
        if w > MAX_WEIGHT:
            raise WeightOverflow(f"edge ({u}, {v}) weight {w} exceeds 2**32")
    if not raw:
        return WeightedGraph(n, _EMPTY, _EMPTY, _EMPTY)
    arr = np.array(raw, dtype=np.int64)
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    key = lo * n + hi
    uniq, inv = np.unique(key, return_inverse=True)
    ew = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(ew, inv, arr[:, 2])
    return WeightedGraph(n, uniq // n, uniq % n, ew)


# -- cuts ------------------------------------------------------------------


@dataclass(frozen=True)
class Cut:
    """A vertex set ``side1`` together with the weight of edges it separates."""

    side1: frozenset
    weight: int

    @classmethod
    def of(cls, G: WeightedGraph, side1: Iterable[int]) -> "Cut":
        s = frozenset(int(u) for u in side1)
        return cls(s, cut_weight(G, s))

    def complement(self, G: WeightedGraph) -> "Cut":
        return Cut(frozenset(G.vertices) - self.side1, self.weight)

    def to_record(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {"value": self.weight, "side1": sorted(u + off for u in self.side1)}


def cut_weight(G: WeightedGraph, side1: Iterable[int]) -> int:
    """Total weight of the edges with exactly one endpoint in ``side1``."""
    inside = np.zeros(G.n, dtype=bool)
    for u in side1:
        G._check_vertex(u)
        inside[u] = True
    if G.m == 0:
        return 0
    return int(G.ew[inside[G.eu] != inside[G.ev]].sum())


# -- bounds ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class QuarterBound:
    """A lower bound stored as an exact multiple of 1/4."""

    quarters: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.quarters, 4)

    def __str__(self):
        return f"{self.quarters}/4 (={self.value})"


def msf_weight(G: WeightedGraph) -> int:
    """Weight of a minimum spanning forest, summed over all components."""
    if G.m == 0:
        return 0
    order = np.lexsort((G.ev, G.eu, G.ew))
    return kernels.kruskal(G.n, np.ascontiguousarray(G.eu[order]),
                           np.ascontiguousarray(G.ev[order]),
                           np.ascontiguousarray(G.ew[order]))


def count_components(G: WeightedGraph) -> int:
    indptr, nbr, _, _ = G.csr
    _, ncomp = kernels.component_labels(indptr, nbr, G.present)
    return ncomp


def poljak_turzik_quarters(G: WeightedGraph) -> QuarterBound:
    """``4 * (w(G)/2 + w_MSF(G)/4)``."""
    return QuarterBound(2 * G.total_weight + msf_weight(G))


def edwards_erdos_quarters(G: WeightedGraph) -> QuarterBound:
    """``4 * (w(G)/2 + (n - c)/4)`` with ``c`` the number of components.

    Only a comparison utility; the solver never uses it.
    """
    return QuarterBound(2 * G.total_weight + G.order - count_components(G))


# -- biconnectivity ----------------------------------------------------------


def group_blocks(edge_block, nblocks, eu, ev):
    """Turn per-edge block labels into ``(vertex arrays, edge counts)``."""
    sel = edge_block >= 0
    if nblocks == 0 or not sel.any():
        return [], np.zeros(0, dtype=np.int64)
    b = edge_block[sel]
    big = int(max(eu.max(), ev.max())) + 1
    keys = np.unique(np.concatenate([b * big + eu[sel], b * big + ev[sel]]))
    bb = keys // big
    vv = keys % big
    cuts = np.flatnonzero(np.diff(bb)) + 1
    members = np.split(vv, cuts)
    return members, np.bincount(b, minlength=nblocks)


@dataclass(frozen=True)
class BlockCutForest:
    """Blocks (biconnected components) and cut vertices of a graph.

    ``blocks`` holds vertex sets; isolated vertices appear as singleton
    blocks. ``forest_edges`` pairs a block index with a cut vertex it
    contains. ``leaf_blocks`` lists blocks with at most one cut vertex.
    """

    blocks: tuple
    cut_vertices: frozenset
    forest_edges: tuple
    leaf_blocks: tuple
    block_edge_counts: tuple

    def cut_vertex_of(self, i: int):
        """The cut vertex of leaf block ``i``, or None for isolated blocks."""
        cv = [c for c in self.blocks[i] if c in self.cut_vertices]
        return cv[0] if len(cv) == 1 else None


def block_cut_forest(G: WeightedGraph) -> BlockCutForest:
    indptr, nbr, eid, _ = G.csr
    edge_block, nblocks, art = kernels.biconnected(indptr, nbr, eid, G.present, _EMPTY, G.m)
    members, counts = group_blocks(edge_block, nblocks, G.eu, G.ev)
    raw = [(tuple(mb.tolist()), int(cnt)) for mb, cnt in zip(members, counts)]
    deg = np.zeros(G.n, dtype=np.int64)
    if G.m:
        deg = np.bincount(np.concatenate([G.eu, G.ev]), minlength=G.n)
    for u in G.vertices:
        if deg[u] == 0:
            raw.append(((u,), 0))
    raw.sort()
    blocks = tuple(frozenset(b) for b, _ in raw)
    cuts = frozenset(np.flatnonzero(art).tolist())
    fedges = []
    leaves = []
    for i, (b, _) in enumerate(raw):
        cv = [c for c in b if c in cuts]
        fedges.extend((i, c) for c in cv)
        if len(cv) <= 1:
            leaves.append(i)
    return BlockCutForest(blocks, cuts, tuple(fedges), tuple(leaves),
                          tuple(cnt for _, cnt in raw))


def is_connected_without(G, removed: Iterable[int], start: int) -> bool:
    """Whether the component of ``start`` stays connected after deleting ``removed``.

    ``G`` is any graph view exposing ``csr`` and ``alive_mask()``. An empty
    remainder counts as disconnected.
    """
    indptr, nbr, _, _ = G.csr
    sub = kernels.reach(indptr, nbr, G.alive_mask(), start)
    for u in removed:
        sub[u] = 0
    remaining = int(sub.sum())
    if remaining == 0:
        return False
    seed = int(np.argmax(sub))
    return kernels.reach_count(indptr, nbr, sub, seed) == remaining


def component_of(G, start: int) -> np.ndarray:
    """Sorted vertex ids of the component containing ``start``."""
    indptr, nbr, _, _ = G.csr
    return np.flatnonzero(kernels.reach(indptr, nbr, G.alive_mask(), start))
