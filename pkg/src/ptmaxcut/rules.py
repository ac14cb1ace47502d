"""The eight reduction rules: witnesses, checks, application and selection.

A rule is described by a :class:`RuleInstance` (rule number plus witness
vertices). :func:`check_rule` tests its precondition literally,
:func:`apply_rule` performs it, and :func:`select_rule` finds an applicable
instance on a leaf block of the block-cut forest.

The functions here accept any "graph view": an object with ``n``, ``m``,
``eu``/``ev`` edge arrays, ``csr``, ``alive_mask()``, ``has_vertex``,
``neighbors`` and ``weight``. :class:`~ptmaxcut.graph.WeightedGraph` is one;
the reduction loop uses a cheaper mutable view over the same arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping

import numpy as np

from . import kernels
from .errors import NoEdges, NotALeafBlock, PreconditionViolated, VertexOutOfRange
from .graph import BlockCutForest, WeightedGraph, group_blocks, is_connected_without

K_STEP = 1  # each rule except Rule 2 buys one quarter of excess

_SET_KEYS = {"X"}
_WITNESS_KEYS = {
    1: ("x", "y", "z"),
    2: ("X", "v"),
    3: ("X", "v"),
    4: ("X", "v"),
    5: ("X", "v", "x", "y", "c"),
    6: ("a", "b", "c"),
    7: ("v", "a", "b", "c"),
    8: ("X", "x", "y", "v", "c"),
}


@dataclass(frozen=True)
class RuleInstance:
    """One rule together with the vertices (and constants) that witness it.

    For rules 5 and 8 ``c`` is the uniform edge weight; for rules 6 and 7 it
    is a vertex.
    """

    rule_id: int
    witnesses: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.rule_id not in _WITNESS_KEYS:
            raise ValueError(f"unknown rule {self.rule_id}")
        keys = _WITNESS_KEYS[self.rule_id]
        if set(self.witnesses) != set(keys):
            raise ValueError(f"rule {self.rule_id} needs witnesses {keys}, got {sorted(self.witnesses)}")
        norm = {}
        for k in keys:
            val = self.witnesses[k]
            norm[k] = frozenset(int(u) for u in val) if k in _SET_KEYS else int(val)
        object.__setattr__(self, "witnesses", norm)

    def __getitem__(self, key):
        return self.witnesses[key]

    @classmethod
    def make(cls, rule_id: int, **witnesses) -> "RuleInstance":
        return cls(rule_id, witnesses)

    def to_record(self) -> dict:
        return {k: sorted(v) if isinstance(v, frozenset) else v for k, v in self.witnesses.items()}

    def __repr__(self):
        inner = ", ".join(f"{k}={sorted(v) if isinstance(v, frozenset) else v}"
                          for k, v in self.witnesses.items())
        return f"Rule{self.rule_id}({inner})"


@dataclass(frozen=True)
class PropertyWitness:
    """Which structural property a leaf block has (A, B, C or D)."""

    kind: str
    x: int | None = None
    y: int | None = None
    a: int | None = None
    b: int | None = None
    c: int | None = None


# -- small graph predicates ---------------------------------------------------


def _require_vertices(view, *vs):
    for v in vs:
        if not isinstance(v, (int, np.integer)) or not view.has_vertex(int(v)):
            raise VertexOutOfRange(f"vertex {v!r} is not in the graph")


def _inner_weights(view, S):
    out = []
    for u in S:
        for w, wt in view.neighbors(u).items():
            if w > u and w in S:
                out.append(wt)
    return out


def _is_clique(view, S):
    k = len(S) - 1
    return all(sum(1 for w in view.neighbors(u) if w in S) == k for u in S)


def _is_uniform(view, S):
    return len(set(_inner_weights(view, S))) <= 1


def _is_leaf_block(view, X, v):
    """``X | {v}`` is a block of ``view`` whose only possible cut vertex is ``v``."""
    B = set(X) | {v}
    if len(B) < 2 or v in X:
        return False
    indptr, nbr, eid, _ = view.csr
    roots = np.array([v], dtype=np.int64)
    eb, nb, art = kernels.biconnected(indptr, nbr, eid, view.alive_mask(), roots, view.m)
    members, _ = group_blocks(eb, nb, view.eu, view.ev)
    if not any(len(mb) == len(B) and set(mb.tolist()) == B for mb in members):
        return False
    return all(not art[u] for u in B if u != v)


def _nbrs_in(view, u, S):
    return sorted(w for w in view.neighbors(u) if w in S)


# -- rule checks -----------------------------------------------------------


def _check1(view, x, y, z):
    if len({x, y, z}) < 3:
        return False
    wxy, wyz = view.weight(x, y), view.weight(y, z)
    if not wxy or not wyz or wxy <= wyz:
        return False
    return is_connected_without(view, (x, y), x)


def _check_block_rule(view, rid, X, v, extra):
    if not X or v in X:
        return False
    B = set(X) | {v}
    if not _is_leaf_block(view, X, v):
        return False
    if rid == 2:
        return _is_clique(view, B) and _is_uniform(view, B)
    if rid == 3:
        return _is_clique(view, B) and _is_uniform(view, X) and not _is_uniform(view, B)
    if rid == 4:
        return (len(_nbrs_in(view, v, X)) >= 2 and _is_clique(view, X)
                and _is_uniform(view, X) and not _is_clique(view, B))
    if rid == 5:
        x, y, c = extra
        # c must be the weight of some edge of G[X] other than {x, y}
        if len(X) < 3:
            return False
        if x == y or x not in X or y not in X or not _is_clique(view, X):
            return False
        if _nbrs_in(view, v, X) != sorted((x, y)):
            return False
        if view.weight(x, y) <= c:
            return False
        for u in X:
            for w, wt in view.neighbors(u).items():
                if w > u and w in X and {u, w} != {x, y} and wt != c:
                    return False
        return view.weight(v, x) >= c and view.weight(v, y) >= c
    raise AssertionError(rid)


def _check6(view, a, b, c):
    if len({a, b, c}) < 3:
        return False
    wab, wbc = view.weight(a, b), view.weight(b, c)
    if not wab or not wbc or view.weight(a, c) or wab != wbc:
        return False
    if not is_connected_without(view, (a, b, c), a):
        return False
    trio = {a, b, c}
    outside = [wt for u in trio for w, wt in view.neighbors(u).items() if w not in trio]
    return bool(outside) and 2 * wab > min(outside)


def _check7(view, v, a, b, c):
    if len({v, a, b, c}) < 4:
        return False
    wab = view.weight(a, b)
    if not wab or view.weight(b, c) != wab or view.weight(a, c):
        return False
    wav, wcv, wbv = view.weight(a, v), view.weight(c, v), view.weight(b, v)
    if not wav or not wcv or wav < 2 * wab or wcv < 2 * wab:
        return False
    if wbv and wbv < 2 * wab:
        return False
    return _is_leaf_block(view, {a, b, c}, v)


def _check8(view, X, x, y, v, c):
    if not X or len({x, y, v}) < 3 or x in X or y in X or v in X:
        return False
    if view.weight(x, y):
        return False
    indptr, nbr, _, _ = view.csr
    comp = kernels.reach(indptr, nbr, view.alive_mask(), x)
    comp[x] = 0
    comp[y] = 0
    x0 = min(X)
    xs = kernels.reach(indptr, nbr, comp, x0)
    if set(np.flatnonzero(xs).tolist()) != set(X):
        return False
    rest = comp & (1 - xs)
    if not rest[v]:
        return False
    if kernels.reach_count(indptr, nbr, rest, v) != int(rest.sum()):
        return False
    for t in (x, y):
        S = set(X) | {t}
        if not _is_clique(view, S) or set(_inner_weights(view, S)) != {c}:
            return False
        ys = [w for w in view.neighbors(t) if rest[w]]
        if ys != [v]:
            return False
    return True


def check_rule(G, inst: RuleInstance) -> bool:
    """True iff every precondition of ``inst`` holds verbatim on ``G``.

    Connectivity conditions refer to the connected component that contains
    the witnesses.
    """
    r, w = inst.rule_id, inst.witnesses
    verts = [w[k] for k in _WITNESS_KEYS[r] if k not in ("X", "c") or (k == "c" and r in (6, 7))]
    verts += sorted(w.get("X", ()))
    _require_vertices(G, *verts)
    if r == 1:
        return _check1(G, w["x"], w["y"], w["z"])
    if r in (2, 3, 4):
        return _check_block_rule(G, r, w["X"], w["v"], None)
    if r == 5:
        return _check_block_rule(G, 5, w["X"], w["v"], (w["x"], w["y"], w["c"]))
    if r == 6:
        return _check6(G, w["a"], w["b"], w["c"])
    if r == 7:
        return _check7(G, w["v"], w["a"], w["b"], w["c"])
    return _check8(G, w["X"], w["x"], w["y"], w["v"], w["c"])


def rule_effect(inst: RuleInstance) -> tuple[frozenset, frozenset, int]:
    """``(removed, marked, k decrease in quarters)`` for a rule instance."""
    r, w = inst.rule_id, inst.witnesses
    if r == 1:
        rem = frozenset((w["x"], w["y"]))
        return rem, rem, K_STEP
    if r == 2:
        return w["X"], frozenset(), 0
    if r in (3, 4):
        return w["X"], frozenset((w["v"],)), K_STEP
    if r == 5:
        return w["X"], frozenset((w["v"], w["x"], w["y"])), K_STEP
    if r in (6, 7):
        rem = frozenset((w["a"], w["b"], w["c"]))
        return rem, rem, K_STEP
    return w["X"] | {w["x"], w["y"]}, frozenset((w["x"], w["y"])), K_STEP


# -- leaf-block classification --------------------------------------------


class _Block:
    """Read-only helper for one block: membership and in-block adjacency."""

    def __init__(self, view, members, v, v_is_cut, nedges=None):
        self.view = view
        self.members = sorted(int(u) for u in members)
        self.set = set(self.members)
        self.v = v
        self.v_is_cut = v_is_cut
        self.X = self.set - {v}
        self._nb = {}
        if nedges is None:
            nedges = sum(len(self.nb(u)) for u in self.members) // 2
        self.nedges = nedges

    def nb(self, u):
        d = self._nb.get(u)
        if d is None:
            S = self.set
            d = {w: wt for w, wt in self.view.neighbors(u).items() if w in S}
            self._nb[u] = d
        return d

    def mask(self):
        m = np.zeros(self.view.n, dtype=np.uint8)
        m[self.members] = 1
        return m


def _classify(blk: _Block) -> PropertyWitness | Iterator:
    size = len(blk.members)
    nX = size - 1
    if blk.nedges == size * (size - 1) // 2:
        return PropertyWitness("A")
    v_in = sorted(blk.nb(blk.v))
    eX = blk.nedges - len(v_in)
    if eX == nX * (nX - 1) // 2:
        return PropertyWitness("B")
    if len(v_in) == 2:
        x, y = v_in
        if y not in blk.nb(x) and eX == nX * (nX - 1) // 2 - 1:
            return PropertyWitness("C", x=x, y=y)
    return None


def _p3_witnesses(blk: _Block):
    """Yield ``(a, b, c)`` with ab, bc edges, no ac edge and ``B - {a,b,c}`` connected.

    Triples avoiding the cut vertex come first (lexicographic order); triples
    through ``v`` are only legal when the block is a whole component.
    """
    view = blk.view
    indptr, nbr, _, _ = view.csr
    base = blk.mask()
    need = len(blk.members) - 3
    passes = [False] if blk.v_is_cut else [False, True]
    for allow_v in passes:
        for a in blk.members:
            if a == blk.v and not allow_v:
                continue
            na = blk.nb(a)
            for b in sorted(na):
                if b == blk.v and not allow_v:
                    continue
                for c in sorted(blk.nb(b)):
                    if c == a or c in na or (c == blk.v and not allow_v):
                        continue
                    if allow_v and blk.v not in (a, b, c):
                        continue
                    if need <= 0:
                        continue
                    sub = base.copy()
                    sub[a] = sub[b] = sub[c] = 0
                    seed = next(u for u in blk.members if sub[u])
                    if kernels.reach_count(indptr, nbr, sub, seed) == need:
                        yield a, b, c


def classify_leaf_block(G, X, v) -> PropertyWitness:
    """Return the first of properties A, B, C, D holding for leaf block ``X | {v}``."""
    X = set(int(u) for u in X)
    _require_vertices(G, v, *sorted(X))
    if not _is_leaf_block(G, X, v):
        raise NotALeafBlock(f"{sorted(X | {v})} is not a leaf block with cut vertex {v}")
    v_is_cut = _is_real_cut(G, X | {v}, v)
    blk = _Block(G, X | {v}, v, v_is_cut)
    prop = _classify(blk)
    if prop is not None:
        return prop
    for a, b, c in _p3_witnesses(blk):
        return PropertyWitness("D", a=a, b=b, c=c)
    raise RuntimeError("no property of a leaf block holds; the graph view is inconsistent")


def _is_real_cut(view, B, v):
    """Whether ``v`` has neighbours outside block ``B``."""
    return any(w not in B for w in view.neighbors(v))


# -- rule selection ----------------------------------------------------------


def _heavy_light_at(blk, s, pool, exclude=()):
    """Heaviest and lightest in-``pool`` edges at ``s``; None if uniform there."""
    items = [(w, wt) for w, wt in blk.nb(s).items() if w in pool]
    if len(items) < 2:
        return None
    hi = max(wt for _, wt in items)
    lo = min(wt for _, wt in items)
    if hi == lo:
        return None
    t_hi = min(w for w, wt in items if wt == hi)
    t_lo = min(w for w, wt in items if wt == lo)
    return t_hi, t_lo


def _rule1_in(blk, pool):
    """Rule 1 on edges inside ``pool`` (a non-uniform clique or near-clique)."""
    for s in sorted(pool):
        hl = _heavy_light_at(blk, s, pool)
        if hl is not None:
            return RuleInstance.make(1, x=hl[0], y=s, z=hl[1])
    raise RuntimeError("expected a non-uniform vertex inside the block")


def _select_in_block(blk: _Block) -> RuleInstance:
    view, v, X = blk.view, blk.v, blk.X
    prop = _classify(blk)
    if prop is not None and prop.kind == "A":
        wX = set()
        wv = set()
        for u in blk.members:
            for w, wt in blk.nb(u).items():
                if w > u:
                    (wv if v in (u, w) else wX).add(wt)
        if len(wX | wv) <= 1:
            return RuleInstance.make(2, X=X, v=v)
        if len(wX) <= 1:
            return RuleInstance.make(3, X=X, v=v)
        return _rule1_in(blk, X)
    if prop is not None and prop.kind == "B":
        if _is_uniform(view, X):
            return RuleInstance.make(4, X=X, v=v)
        v_in = sorted(blk.nb(v))
        if len(v_in) >= 3:
            return _rule1_in(blk, X)
        p, q = v_in
        for s in sorted(X):
            nbs = blk.nb(s)
            lo = min(nbs.values())
            t_lo = min(w for w, wt in nbs.items() if wt == lo)
            for t in sorted(nbs):
                if t in X and nbs[t] > lo and {s, t} != {p, q}:
                    return RuleInstance.make(1, x=t, y=s, z=t_lo)
        c = next(wt for u in sorted(X) for w, wt in blk.nb(u).items()
                 if w in X and {u, w} != {p, q})
        return RuleInstance.make(5, X=X, v=v, x=p, y=q, c=c)
    if prop is not None and prop.kind == "C":
        x, y = prop.x, prop.y
        if not _is_uniform(view, X):
            return _rule1_in(blk, X)
        c = blk.nb(x)[min(blk.nb(x).keys() & X)]
        return RuleInstance.make(8, X=X - {x, y}, x=x, y=y, v=v, c=c)
    for a, b, c in _p3_witnesses(blk):
        inst = _select_property_d(blk, a, b, c)
        if inst is not None:
            return inst
    raise RuntimeError(f"no reduction rule found on block {blk.members}")


def _select_property_d(blk, a, b, c):
    view = blk.view
    wab, wbc = blk.nb(a)[b], blk.nb(b)[c]
    if wab > wbc:
        return RuleInstance.make(1, x=a, y=b, z=c)
    if wbc > wab:
        return RuleInstance.make(1, x=c, y=b, z=a)
    trio = (a, b, c)
    tset = set(trio)
    rim = {u: sorted(w for w in blk.nb(u) if w not in tset) for u in trio}
    lightest = min(blk.nb(u)[w] for u in trio for w in rim[u])
    if 2 * wab > lightest:
        return RuleInstance.make(6, a=a, b=b, c=c)

    indptr, nbr, eid, _ = view.csr
    base = blk.mask()

    def articulation(removed):
        sub = base.copy()
        for u in removed:
            sub[u] = 0
        _, _, art = kernels.biconnected(indptr, nbr, eid, sub,
                                        np.zeros(0, dtype=np.int64), view.m)
        return art

    art_u = {u: articulation((u,)) for u in trio}
    for u in trio:
        other = a if u == b else b
        for z in rim[u]:
            if z == blk.v and blk.v_is_cut:
                # removing the real cut vertex would split the component
                continue
            if not art_u[u][z]:
                return RuleInstance.make(1, x=z, y=u, z=other)
    art_abc = articulation(trio)
    for u in trio:
        for z in rim[u]:
            if not art_abc[z]:
                inst = RuleInstance.make(7, v=z, a=a, b=b, c=c)
                if _rule7_fits(blk, inst):
                    return inst
    hood = sorted(set().union(*rim.values()))
    if len(hood) == 1:
        inst = RuleInstance.make(7, v=hood[0], a=a, b=b, c=c)
        if _rule7_fits(blk, inst):
            return inst
    return None


def _rule7_fits(blk, inst):
    v, a, b, c = inst["v"], inst["a"], inst["b"], inst["c"]
    if blk.set != {v, a, b, c}:
        return False
    if blk.v_is_cut and v != blk.v:
        return False
    view = blk.view
    wab = view.weight(a, b)
    wbv = view.weight(b, v)
    return (view.weight(a, v) >= 2 * wab and view.weight(c, v) >= 2 * wab
            and (not wbv or wbv >= 2 * wab))


def _pick_leaf(bcf: BlockCutForest):
    best = None
    for i in bcf.leaf_blocks:
        blk = bcf.blocks[i]
        if len(blk) < 2:
            continue
        key = min(blk)
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


def select_rule(G, bcf: BlockCutForest | None = None) -> RuleInstance:
    """Find an applicable rule on the leaf block with the smallest vertex id."""
    if G.m == 0:
        raise NoEdges("graph has no edges; no rule applies")
    if bcf is None:
        from .graph import block_cut_forest
        bcf = block_cut_forest(G)
    i = _pick_leaf(bcf)
    if i is None:
        raise NoEdges("no leaf block with an edge")
    members = bcf.blocks[i]
    cv = bcf.cut_vertex_of(i)
    v = cv if cv is not None else min(members)
    blk = _Block(G, members, v, cv is not None, bcf.block_edge_counts[i])
    return _select_in_block(blk)


# -- application ---------------------------------------------------------------


def incident_payload(view, removed) -> tuple:
    """Edges with at least one endpoint in ``removed``, as sorted ``(u, v, w)``."""
    out = set()
    for u in removed:
        for w, wt in view.neighbors(u).items():
            out.add((min(u, w), max(u, w), wt))
    return tuple(sorted(out))


def apply_rule(G: WeightedGraph, inst: RuleInstance, k_quarters: int):
    """Apply ``inst`` to ``G``; returns ``(G', step, k')``.

    Raises :class:`PreconditionViolated` when the rule does not hold.
    """
    from .reduction import ReductionStep

    if not check_rule(G, inst):
        raise PreconditionViolated(f"{inst!r} does not apply")
    removed, marked, dk = rule_effect(inst)
    step = ReductionStep(inst, removed, marked, dk, incident_payload(G, removed))
    return G.without(removed), step, k_quarters - dk
