"""Undo one reduction step on a cut.

Given a cut ``C'`` of the reduced graph, :func:`extend_cut` places the
removed vertices so that ``C`` agrees with ``C'`` on the survivors and gains
enough weight: whenever ``4 w(C') >= 2 w(G') + msf(G') + k'`` the extended
cut satisfies ``4 w(C) >= 2 w(G) + msf(G) + k``. Everything is computed from
the step's payload (the edges touching the removed vertices).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ContractViolated, MalformedPayload, PreconditionViolated
from .graph import Cut, WeightedGraph, cut_weight, msf_weight

EXHAUSTIVE_LIMIT = 16

# every claim18_cut call updates these; the acceptance suite reads them
CLAIM18_STATS = {"calls": 0, "violations": 0}


@dataclass(frozen=True)
class ExtensionContext:
    step: object  # ReductionStep
    survivors_cut: Cut


# -- building blocks ---------------------------------------------------------


def uniform_clique_cut(n: int, c: int, fixed_side: int | None = None) -> Cut:
    """Balanced cut of the uniform clique on vertices ``0..n-1``.

    Vertex 0 lands on ``fixed_side`` when given.
    """
    if n < 1 or c < 1:
        raise ValueError("need n >= 1 and c >= 1")
    h = n // 2
    side1 = set(range(h, n))
    if fixed_side is not None and (0 in side1) != bool(fixed_side):
        side1 = set(range(n)) - side1
    return Cut(frozenset(side1), c * h * (n - h))


def _balanced(vertices, anchor_side=None):
    """Put the second half of ``vertices`` (sorted) on side 1."""
    vs = sorted(vertices)
    cut = uniform_clique_cut(len(vs), 1, anchor_side)
    return {vs[i] for i in cut.side1}


def clique_apex_maxcut(X, c: int, v: int, apex_weights: dict) -> Cut:
    """Exact max cut of a uniform-``c`` clique ``X`` plus a vertex ``v``.

    ``apex_weights`` maps members of ``X`` to their edge weight to ``v``
    (absent means no edge). ``v`` is placed on side 0; the ``p`` vertices
    moved to side 1 are those with the heaviest edges to ``v``.
    """
    xs = sorted(X, key=lambda x: (-apex_weights.get(x, 0), x))
    n = len(xs)
    best, best_p = None, 0
    acc = 0
    for p in range(n + 1):
        if p:
            acc += apex_weights.get(xs[p - 1], 0)
        val = c * p * (n - p) + acc
        if best is None or val > best:
            best, best_p = val, p
    return Cut(frozenset(xs[:best_p]), best)


def _exhaustive(H: WeightedGraph) -> set:
    verts = H.vertices
    idx = {u: i for i, u in enumerate(verts)}
    n = len(verts)
    adj = [[] for _ in range(n)]
    for u, v, w in H.edges():
        adj[idx[u]].append((idx[v], w))
        adj[idx[v]].append((idx[u], w))
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adj])
    nbr = np.array([j for a in adj for j, _ in a], dtype=np.int64)
    wts = np.array([w for a in adj for _, w in a], dtype=np.int64)
    z = np.zeros(n, dtype=np.int64)
    _, mask = kernels.gray_maxcut(n, indptr, nbr, wts, z, z, n > 0)
    return {verts[i] for i in range(n) if mask >> i & 1}


def _uniform_clique_weight(H: WeightedGraph):
    """The common edge weight if ``H`` is a uniform clique, else None (0 if no edges)."""
    n = H.order
    if H.m != n * (n - 1) // 2:
        return None
    if H.m == 0:
        return 0
    ws = set(H.ew.tolist())
    return ws.pop() if len(ws) == 1 else None


def _apex_of(H: WeightedGraph):
    """A vertex ``a`` such that ``H - a`` is a uniform clique, or None."""
    n = H.order
    if n < 2:
        return None
    wcount = Counter(H.ew.tolist())
    target = (n - 1) * (n - 2) // 2
    for a in H.vertices:
        nb = H.neighbors(a)
        if H.m - len(nb) != target:
            continue
        rest = wcount.copy()
        rest.subtract(nb.values())
        if sum(1 for cnt in rest.values() if cnt > 0) <= 1:
            return a
    return None


def _inner_cut(inner: WeightedGraph) -> set:
    """A cut of ``inner`` meeting the Poljak-Turzik bound for the supported shapes."""
    c = _uniform_clique_weight(inner)
    if c is not None:
        return _balanced(inner.vertices)
    a = _apex_of(inner)
    if a is not None:
        X = [u for u in inner.vertices if u != a]
        rest = inner.without([a])
        cw = int(rest.ew[0]) if rest.m else 1
        return set(clique_apex_maxcut(X, cw, a, inner.neighbors(a)).side1)
    if inner.order <= EXHAUSTIVE_LIMIT:
        return _exhaustive(inner)
    raise ContractViolated(f"no cut construction for an inner graph on {inner.order} vertices")


def claim18_cut(H: WeightedGraph, u: int, v: int) -> Cut:
    """Cut of ``H`` with ``4 w(C) >= 2 w(H) + msf(H) + 1``.

    Needs an edge ``{u, v}``, an edge ``{v, x}`` lighter than it, and
    ``H - {u, v}`` connected. A cut of ``H - {u, v}`` is extended by exactly
    one of ``u`` and ``v``, whichever cuts more.
    """
    wuv = H.weight(u, v)
    if not wuv:
        raise PreconditionViolated(f"{{{u}, {v}}} is not an edge")
    if not any(wt < wuv for x, wt in H.neighbors(v).items() if x != u):
        raise PreconditionViolated(f"no edge at {v} lighter than w({u}, {v}) = {wuv}")
    inner = H.without((u, v))
    if inner.order == 0 or _components(inner) != 1:
        raise PreconditionViolated(f"removing {u} and {v} disconnects the graph")
    CLAIM18_STATS["calls"] += 1
    base = _inner_cut(inner)
    best = None
    for extra in (u, v):
        side = frozenset(base | {extra})
        w = cut_weight(H, side)
        if best is None or w > best.weight:
            best = Cut(side, w)
    if 4 * best.weight < 2 * H.total_weight + msf_weight(H) + 1:
        CLAIM18_STATS["violations"] += 1
        raise ContractViolated(
            f"cut of weight {best.weight} misses 2w(H)+msf(H)+1 = "
            f"{2 * H.total_weight + msf_weight(H) + 1} quarters")
    return best


def _components(G: WeightedGraph) -> int:
    indptr, nbr, _, _ = G.csr
    _, nc = kernels.component_labels(indptr, nbr, G.present)
    return nc


# -- per-rule extension ------------------------------------------------------


def _payload_graph(step) -> WeightedGraph:
    vs = {u for e in step.payload for u in e[:2]}
    n = max(vs) + 1 if vs else 0
    G = WeightedGraph.from_edges(n, [tuple(e) for e in step.payload])
    return G.induced(vs)


def _crossing(edges, side1):
    return sum(w for a, b, w in edges if (a in side1) != (b in side1))


def _pick(edges, options, base=frozenset()):
    """``base | option`` for the option cutting the most weight of ``edges``.

    Ties go to the option with the smaller vertex id.
    """
    best = max(options, key=lambda s: (_crossing(edges, base | s), -min(s, default=1 << 62)))
    return base | best


def _rule1(step, c1):
    x, y = step.instance["x"], step.instance["y"]
    return _pick(step.payload, [{x}, {y}], c1)


def _rule6(step, c1):
    a, b, c = step.instance["a"], step.instance["b"], step.instance["c"]
    return _pick(step.payload, [{a, c}, {b}], c1)


def _rule7(step, c1, H):
    inst = step.instance
    v, a, b, c = inst["v"], inst["a"], inst["b"], inst["c"]
    v_in = v in c1
    if H.weight(b, v):
        return c1 | ({a, b, c} if not v_in else set())
    return c1 | ({a, c} if not v_in else {b})


def _rule8(step, c1, H):
    inst = step.instance
    X, x, y, v = inst["X"], inst["x"], inst["y"], inst["v"]
    nbar = len(X)
    t = (nbar + 1) // 2 if nbar % 2 else nbar // 2 + 1
    with_v = set(sorted(X)[:t])
    if v in c1:
        return c1 | with_v
    return c1 | {x, y} | (set(X) - with_v)


def _opposite(H, v, side1):
    """Vertices of the block ``H`` on the other side from ``v``."""
    v_side = v in side1
    return {u for u in H.vertices if u != v and (u in side1) != v_side}


def _claim18_pair_rule3(H, X, v, c):
    for x in sorted(X):
        if H.weight(v, x) > c:
            return v, x
    x = min(x for x in X if H.weight(v, x) < c)
    other = min(X - {x})
    return other, x


def _claim18_pair_rule4(H, X, v):
    y = min(u for u in X if not H.weight(v, u))
    for x in sorted(X):
        wxv = H.weight(x, v)
        if not wxv:
            continue
        wxy = H.weight(x, y)
        if wxy > wxv:
            return y, x
        if wxy < wxv:
            return v, x
    raise MalformedPayload("rule 4 block is uniform; no weight change at v")


def _block_opposite(step, H):
    """Vertices of ``X`` to place opposite ``v`` for rules 2-5."""
    inst = step.instance
    r, X, v = inst.rule_id, set(inst["X"]), inst["v"]
    if r == 2:
        side = _balanced(H.vertices)
        return _opposite(H, v, side)
    if r == 3:
        c = _xweight(H, X)
        u, center = _claim18_pair_rule3(H, X, v, c)
        return _opposite(H, v, claim18_cut(H, u, center).side1)
    if r == 4:
        if _uniform_clique_weight(H.without([v])) is None:
            raise MalformedPayload("rule 4 payload: G[X] is not a uniform clique")
        if len(set(H.ew.tolist())) > 1:
            u, center = _claim18_pair_rule4(H, X, v)
            return _opposite(H, v, claim18_cut(H, u, center).side1)
        c = int(H.ew[0])
        cut = clique_apex_maxcut(X, c, v, H.neighbors(v))
        return set(cut.side1)
    return _rule5_opposite(step, H)


def _xweight(H, X):
    for u in sorted(X):
        for w, wt in H.neighbors(u).items():
            if w in X:
                return wt
    raise MalformedPayload("block has no edge inside X")


def _rule5_opposite(step, H):
    inst = step.instance
    X, v, x, y, c = set(inst["X"]), inst["v"], inst["x"], inst["y"], inst["c"]
    Xp = sorted(X - {x, y})
    wxy = H.weight(x, y)
    if H.weight(x, v) > c or H.weight(y, v) > c:
        center = x if H.weight(x, v) > c else y
        return _opposite(H, v, claim18_cut(H, v, center).side1)
    if len(Xp) == 1:
        if wxy > 2 * c:
            return set(_pick(H.edges(), [{x}, {y}]))
        return {x, y}
    if wxy >= 2 * c:
        half = _balanced(Xp)
        other = set(Xp) - half
        opts = []
        for part in (half, other):
            for extra in (x, y):
                side = part | {extra}
                opts.append(_opposite(H, v, side))
        return _pick(H.edges(), opts)
    n = len(Xp)
    t = (n - 1) // 2 if n % 2 else n // 2 - 1
    return {x, y} | set(Xp[:t])


def extend_cut(ctx: ExtensionContext) -> Cut:
    """Extend ``ctx.survivors_cut`` through ``ctx.step`` to the larger graph."""
    step = ctx.step
    c1 = set(ctx.survivors_cut.side1)
    if c1 & step.removed:
        raise MalformedPayload("survivor cut contains removed vertices")
    inst = step.instance
    r = inst.rule_id
    removed = step.removed
    for a, b, _ in step.payload:
        if a not in removed and b not in removed:
            raise MalformedPayload(f"payload edge {{{a}, {b}}} misses the removed set")
    H = _payload_graph(step)
    if r == 1:
        if not H.weight(inst["x"], inst["y"]):
            raise MalformedPayload("rule 1 payload lacks the edge {x, y}")
        side = _rule1(step, c1)
    elif r == 6:
        side = _rule6(step, c1)
    elif r == 7:
        side = _rule7(step, c1, H)
    elif r == 8:
        side = _rule8(step, c1, H)
    else:
        v = inst["v"]
        if not H.has_vertex(v):
            raise MalformedPayload("block payload does not reach the cut vertex")
        H = H.induced(set(inst["X"]) | {v})
        opp = _block_opposite(step, H)
        side = c1 | (opp if v not in c1 else set(inst["X"]) - opp)
    side = frozenset(side)
    return Cut(side, ctx.survivors_cut.weight + _crossing(step.payload, side))


def replay(trace, residual_cut: Cut) -> Cut:
    """Apply :func:`extend_cut` for every step of ``trace`` in reverse order."""
    cut = residual_cut
    for step in reversed(trace):
        cut = extend_cut(ExtensionContext(step, cut))
    return cut
