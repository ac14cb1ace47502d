"""Both kernel backends against each other and against networkx."""

import random

import networkx as nx
import numpy as np
import pytest

from ptmaxcut import kernels
from ptmaxcut.generators import random_graph, ucf
from ptmaxcut.graph import WeightedGraph, group_blocks
from ptmaxcut.ucf import build_plan

EMPTY = np.zeros(0, dtype=np.int64)


def _graphs(seed, count, nmax=14):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, nmax)
        # sparse-ish graphs have more interesting block structure
        m = rng.randint(n - 1, min(n * (n - 1) // 2, 2 * n))
        G = random_graph(n, m, 7, rng.randrange(10**6))
        drop = rng.sample(range(n), rng.randint(0, n // 3))
        yield G.without(drop) if drop else G


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_weighted_edges_from(G.edges())
    return H


def test_biconnected_matches_networkx(backend):
    for G in _graphs(1, 150):
        indptr, nbr, eid, _ = G.csr
        eb, nb, art = backend.biconnected(indptr, nbr, eid, G.alive_mask(), EMPTY, G.m)
        members, _ = group_blocks(np.asarray(eb), nb, G.eu, G.ev)
        ours = {frozenset(mb.tolist()) for mb in members}
        H = _nx(G)
        assert ours == {frozenset(c) for c in nx.biconnected_components(H)}
        assert set(np.flatnonzero(art).tolist()) == set(nx.articulation_points(H))


def test_component_labels_and_reach(backend):
    for G in _graphs(2, 100):
        indptr, nbr, _, _ = G.csr
        lab, nc = backend.component_labels(indptr, nbr, G.alive_mask())
        H = _nx(G)
        assert nc == nx.number_connected_components(H)
        for comp in nx.connected_components(H):
            assert len({int(lab[u]) for u in comp}) == 1
            u = min(comp)
            assert backend.reach_count(indptr, nbr, G.alive_mask(), u) == len(comp)
            assert set(np.flatnonzero(backend.reach(indptr, nbr, G.alive_mask(), u)).tolist()) == comp


def test_kruskal_matches_networkx(backend):
    for G in _graphs(3, 100):
        if not G.m:
            continue
        order = np.lexsort((G.ev, G.eu, G.ew))
        got = backend.kruskal(G.n, np.ascontiguousarray(G.eu[order]),
                              np.ascontiguousarray(G.ev[order]), np.ascontiguousarray(G.ew[order]))
        want = sum(d["weight"] for _, _, d in nx.minimum_spanning_edges(_nx(G), data=True))
        assert got == want


def _csr(n, edges):
    adj = [[] for _ in range(n)]
    for u, v, w in edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adj])
    nbr = np.array([j for a in adj for j, _ in a], dtype=np.int64)
    wts = np.array([w for a in adj for _, w in a], dtype=np.int64)
    return indptr, nbr, wts


def _naive(n, edges, w0, w1, fix_first):
    best = None
    for mask in range(1 << n):
        if fix_first and mask & 1:
            continue
        val = sum(w for u, v, w in edges if (mask >> u ^ mask >> v) & 1)
        val += sum(int(w1[i]) if mask >> i & 1 else int(w0[i]) for i in range(n))
        # ascending side-1 id tuples give the lexicographic tie-break
        key = tuple(i for i in range(n) if mask >> i & 1)
        if best is None or val > best[0] or (val == best[0] and key < best[1]):
            best = (val, key, mask)
    return best[0], best[2]


@pytest.mark.parametrize("fix_first", [False, True])
def test_gray_maxcut_matches_naive(backend, fix_first):
    rng = random.Random(4)
    for _ in range(120):
        n = rng.randint(1, 8)
        edges = [(u, v, rng.randint(1, 4)) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        w0 = np.array([rng.randint(0, 3) for _ in range(n)], dtype=np.int64)
        w1 = np.array([rng.randint(0, 3) for _ in range(n)], dtype=np.int64)
        indptr, nbr, wts = _csr(n, edges)
        assert backend.gray_maxcut(n, indptr, nbr, wts, w0, w1, fix_first) == _naive(n, edges, w0, w1, fix_first)


def test_ucf_scan_backends_agree():
    if kernels.compiled_backend is None:
        pytest.skip("compiled kernels not built")
    rng = random.Random(6)
    for _ in range(60):
        H = ucf(rng.randint(1, 5), 4, 4, rng.randrange(10**6))
        p = build_plan(H)
        t = rng.randint(0, 5)
        n = H.n + t
        sv_ptr = [0]
        sv_v, sv_w = [], []
        for _ in range(t):
            for v in rng.sample(range(H.n), rng.randint(0, min(3, H.n))):
                sv_v.append(v)
                sv_w.append(rng.randint(1, 4))
            sv_ptr.append(len(sv_v))
        pairs = [(i, j) for i in range(t) for j in range(i + 1, t) if rng.random() < 0.5]
        a = lambda x: np.array(x, dtype=np.int64)
        args = (p.blk_v, p.blk_c, p.blk_ptr, p.blk_x, p.roots,
                a([rng.randint(0, 3) for _ in range(n)]), a([rng.randint(0, 3) for _ in range(n)]),
                a(sv_ptr), a(sv_v), a(sv_w),
                a([i for i, _ in pairs]), a([j for _, j in pairs]), a([rng.randint(1, 3) for _ in pairs]))
        for early, target in ((False, 0), (True, rng.randint(0, 40))):
            got = kernels.compiled_backend.ucf_scan(*args, 0, 1 << t, target, early)
            want = kernels.python_backend.ucf_scan(*args, 0, 1 << t, target, early)
            assert got == want


def test_backend_selection_env(monkeypatch):
    import importlib

    monkeypatch.setenv("PTMAXCUT_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.biconnected is mod.python_backend.biconnected
    finally:
        monkeypatch.delenv("PTMAXCUT_PURE")
        importlib.reload(kernels)


def test_edgeless_inputs(backend):
    G = WeightedGraph.from_edges(3, [])
    indptr, nbr, eid, _ = G.csr
    eb, nb, art = backend.biconnected(indptr, nbr, eid, G.alive_mask(), EMPTY, 0)
    assert nb == 0 and not np.asarray(art).any()
    assert backend.component_labels(indptr, nbr, G.alive_mask())[1] == 3
