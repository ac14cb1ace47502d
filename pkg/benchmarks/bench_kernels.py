"""Compiled kernels against their pure-Python twins.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``. Each row gives
the best-of-N wall time per backend and the speedup; outputs are compared so
a mismatch aborts the run.
"""

import argparse
import random
import timeit

import numpy as np

from ptmaxcut import kernels
from ptmaxcut.generators import random_graph, ucf
from ptmaxcut.graph import WeightedGraph
from ptmaxcut.solver import _Enumeration


def _cases():
    G = random_graph(20000, 60000, 5, 1)
    indptr, nbr, eid, _ = G.csr
    alive = G.alive_mask()
    empty = np.zeros(0, dtype=np.int64)
    yield "biconnected n=2e4 m=6e4", "biconnected", (indptr, nbr, eid, alive, empty, G.m)
    yield "component_labels n=2e4", "component_labels", (indptr, nbr, alive)
    order = np.lexsort((G.ev, G.eu, G.ew))
    yield "kruskal m=6e4", "kruskal", (G.n, np.ascontiguousarray(G.eu[order]),
                                        np.ascontiguousarray(G.ev[order]), np.ascontiguousarray(G.ew[order]))

    small = random_graph(16, 50, 5, 2)
    ip, nb, _, w = small.csr
    z = np.zeros(16, dtype=np.int64)
    yield "gray_maxcut n=16", "gray_maxcut", (16, ip, nb, w, z, z, True)

    rng = random.Random(3)
    H = ucf(30, 5, 4, 4)
    edges = list(H.edges())
    base = H.n
    for s in range(10):
        for v in rng.sample(range(base), 4):
            edges.append((base + s, v, rng.randint(1, 4)))
    G = WeightedGraph.from_edges(base + 10, edges)
    enum = _Enumeration(G, range(base, base + 10))
    p = enum.plan
    yield "ucf_scan |S|=10", "ucf_scan", (p.blk_v, p.blk_c, p.blk_ptr, p.blk_x, p.roots, enum.zero, enum.zero,
                                          *enum.sv, *enum.ss, 0, 1 << 9, 0, False)


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . --no-build-isolation")
    print(f"{'kernel':28} {'cython':>10} {'python':>10} {'speedup':>8}")
    for label, name, call_args in _cases():
        fc = getattr(kernels.compiled_backend, name)
        fp = getattr(kernels.python_backend, name)
        if not _same(fc(*call_args), fp(*call_args)):
            raise SystemExit(f"{name}: backends disagree")
        tc = min(timeit.repeat(lambda: fc(*call_args), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: fp(*call_args), number=1, repeat=args.repeat))
        print(f"{label:28} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
