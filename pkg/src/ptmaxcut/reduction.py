"""The reduction loop: apply rules until k is used up or no edge is left.

The loop works on a mutable "alive" mask over the original graph arrays and
keeps an index of the current blocks. A Rule 2 step deletes its leaf block
locally; any other step recomputes the blocks of the affected component.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .graph import WeightedGraph, group_blocks
from .rules import RuleInstance, _Block, _select_in_block, incident_payload, rule_effect


@dataclass(frozen=True)
class ReductionStep:
    instance: RuleInstance
    removed: frozenset
    marked: frozenset
    k_delta_quarters: int
    payload: tuple  # (u, v, w) edges touching ``removed``, u < v

    @property
    def rule_id(self) -> int:
        return self.instance.rule_id

    def to_record(self, one_based: bool = False) -> dict:
        off = 1 if one_based else 0
        wit = {}
        for key, val in self.instance.witnesses.items():
            is_vertex = not (key == "c" and self.rule_id in (5, 8))
            if isinstance(val, frozenset):
                wit[key] = sorted(u + off for u in val)
            else:
                wit[key] = val + off if is_vertex else val
        return {
            "rule": self.rule_id,
            "witnesses": wit,
            "removed": sorted(u + off for u in self.removed),
            "marked": sorted(u + off for u in self.marked),
            "k_delta": self.k_delta_quarters,
            "payload": [[u + off, v + off, w] for u, v, w in self.payload],
        }


@dataclass(frozen=True)
class ReductionOutcome:
    trace: tuple
    S: frozenset
    k_remaining_quarters: int
    residual_vertices: frozenset
    stopped_early: bool
    graph: WeightedGraph = field(repr=False, compare=False)

    def residual_graph(self) -> WeightedGraph:
        """The graph left after all steps (marked survivors included)."""
        return self.graph.induced(self.residual_vertices)

    def ucf_graph(self) -> WeightedGraph:
        """``G - S``: the input graph without the marked vertices."""
        return self.graph.without(self.S)


class _Work:
    """Mutable view of a graph: the original arrays plus an alive mask."""

    def __init__(self, G: WeightedGraph):
        self.G = G
        self.n = G.n
        self.m = G.m
        self.eu, self.ev = G.eu, G.ev
        self.csr = G.csr
        self.alive = G.present.copy()

    def alive_mask(self):
        return self.alive

    def has_vertex(self, u):
        return 0 <= u < self.n and bool(self.alive[u])

    def neighbors(self, u):
        al = self.alive
        return {w: wt for w, wt in self.G.neighbors(u).items() if al[w]}

    def weight(self, u, v):
        if not (self.alive[u] and self.alive[v]):
            return 0
        return self.G.weight(u, v)

    def remove(self, vs):
        for u in vs:
            self.alive[u] = 0


class _BlockIndex:
    """Current blocks with edges, per-vertex block counts and a leaf heap."""

    def __init__(self, work: _Work):
        self.work = work
        self.count = np.zeros(work.n, dtype=np.int64)
        self.blocks = {}  # id -> (members array, edge count, component label)
        self.by_label = defaultdict(set)
        self.cut_blocks = defaultdict(set)
        self.heap = []
        self._next = 0

    def build_all(self):
        w = self.work
        indptr, nbr, eid, _ = w.csr
        eb, nb, _ = kernels.biconnected(indptr, nbr, eid, w.alive, np.zeros(0, np.int64), w.m)
        labels, _ = kernels.component_labels(indptr, nbr, w.alive)
        self._add(eb, nb, labels)

    def rebuild(self, label, root):
        for bid in list(self.by_label.pop(label, ())):
            members = self.blocks.pop(bid)[0]
            self.count[members] -= 1
            for u in members.tolist():
                self.cut_blocks.pop(u, None)
        w = self.work
        if not w.alive[root]:
            return
        indptr, nbr, eid, _ = w.csr
        eb, nb, _ = kernels.biconnected(indptr, nbr, eid, w.alive,
                                        np.array([root], dtype=np.int64), w.m)
        self._add(eb, nb, None, label)

    def _add(self, eb, nb, labels, label=None):
        members, ecount = group_blocks(eb, nb, self.work.eu, self.work.ev)
        if not members:
            return
        np.add.at(self.count, np.concatenate(members), 1)
        new = []
        for mb, ne in zip(members, ecount):
            bid = self._next
            self._next += 1
            lab = int(labels[mb[0]]) if labels is not None else label
            self.blocks[bid] = (mb, int(ne), lab)
            self.by_label[lab].add(bid)
            new.append(bid)
        for bid in new:
            mb = self.blocks[bid][0]
            cuts = mb[self.count[mb] >= 2]
            for u in cuts.tolist():
                self.cut_blocks[u].add(bid)
            if len(cuts) <= 1:
                heapq.heappush(self.heap, (int(mb[0]), bid))

    def drop_leaf(self, bid, v, v_is_cut):
        mb, _, lab = self.blocks.pop(bid)
        self.by_label[lab].discard(bid)
        self.count[mb] -= 1
        if not v_is_cut:
            return
        rest = self.cut_blocks[v]
        rest.discard(bid)
        if self.count[v] == 1:
            (other,) = rest
            del self.cut_blocks[v]
            omb = self.blocks[other][0]
            if int((self.count[omb] >= 2).sum()) <= 1:
                heapq.heappush(self.heap, (int(omb[0]), other))

    def pop_leaf(self):
        while self.heap:
            _, bid = heapq.heappop(self.heap)
            if bid in self.blocks:
                return bid
        return None


def reduce(G: WeightedGraph, k_quarters: int, mode: str = "decide") -> ReductionOutcome:
    """Apply reduction rules to ``G`` with budget ``k_quarters``.

    ``mode="decide"`` stops as soon as the budget is used up (k <= 0);
    ``mode="full"`` continues until no edge is left.
    """
    if mode not in ("decide", "full"):
        raise ValueError(f"mode must be 'decide' or 'full', not {mode!r}")
    work = _Work(G)
    index = _BlockIndex(work)
    index.build_all()
    k = int(k_quarters)
    trace = []
    S = set()
    stopped = False
    while True:
        if mode == "decide" and k <= 0 and index.blocks:
            stopped = True
            break
        bid = index.pop_leaf()
        if bid is None:
            break
        members, nedges, label = index.blocks[bid]
        cuts = members[index.count[members] >= 2]
        v_is_cut = len(cuts) == 1
        v = int(cuts[0]) if v_is_cut else int(members[0])
        inst = _select_in_block(_Block(work, members.tolist(), v, v_is_cut, nedges))
        removed, marked, dk = rule_effect(inst)
        payload = incident_payload(work, removed)
        work.remove(removed)
        trace.append(ReductionStep(inst, removed, marked, dk, payload))
        S |= marked
        k -= dk
        if inst.rule_id == 2:
            index.drop_leaf(bid, v, v_is_cut)
        else:
            root = next((u for e in payload for u in e[:2] if work.alive[u]), None)
            if root is None:
                index.rebuild(label, int(members[0]))
            else:
                index.rebuild(label, root)
    residual = frozenset(np.flatnonzero(work.alive).tolist())
    return ReductionOutcome(tuple(trace), frozenset(S), k, residual, stopped, G)


def verify_ucf(G: WeightedGraph) -> bool:
    """True iff every block of ``G`` is a clique with a single edge weight."""
    if G.m == 0:
        return True
    indptr, nbr, eid, _ = G.csr
    eb, nb, _ = kernels.biconnected(indptr, nbr, eid, G.alive_mask(), np.zeros(0, np.int64), G.m)
    ew = G.ew
    lo = np.full(nb, np.iinfo(np.int64).max, dtype=np.int64)
    hi = np.zeros(nb, dtype=np.int64)
    np.minimum.at(lo, eb, ew)
    np.maximum.at(hi, eb, ew)
    if not np.array_equal(lo, hi):
        return False
    members, ecount = group_blocks(eb, nb, G.eu, G.ev)
    return all(ne == len(mb) * (len(mb) - 1) // 2 for mb, ne in zip(members, ecount))
