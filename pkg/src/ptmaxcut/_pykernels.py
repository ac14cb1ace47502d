"""Pure-Python implementations of the hot kernels.

Signatures mirror ``_ckernels.pyx`` exactly; :mod:`ptmaxcut.kernels` picks one
of the two at import time. All array arguments are numpy arrays (int64 unless
noted); results are numpy arrays or Python ints.
"""

import numpy as np


def biconnected(indptr, nbr, eid, alive, roots, m):
    """Label edges with biconnected-component ids and flag articulation points.

    Only vertices with ``alive[v] != 0`` exist. The DFS starts from each entry
    of ``roots`` in order (all vertices if ``roots`` is empty). Edges not
    reached keep label -1.

    Returns ``(edge_block, nblocks, art)``.
    """
    ip = indptr.tolist()
    nb = nbr.tolist()
    ei = eid.tolist()
    al = alive.tolist()
    n = len(ip) - 1
    edge_block = [-1] * m
    art = [0] * n
    disc = [-1] * n
    low = [0] * n
    pe = [-1] * n
    it = [0] * n
    t = 0
    nblocks = 0
    order = roots.tolist() if len(roots) else range(n)
    for root in order:
        if not al[root] or disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        it[root] = ip[root]
        pe[root] = -1
        stack = [root]
        estack = []
        root_children = 0
        while stack:
            u = stack[-1]
            if it[u] < ip[u + 1]:
                j = it[u]
                it[u] = j + 1
                w = nb[j]
                e = ei[j]
                if not al[w] or e == pe[u]:
                    continue
                if disc[w] == -1:
                    pe[w] = e
                    disc[w] = low[w] = t
                    t += 1
                    it[w] = ip[w]
                    estack.append(e)
                    stack.append(w)
                elif disc[w] < disc[u]:
                    if disc[w] < low[u]:
                        low[u] = disc[w]
                    estack.append(e)
            else:
                stack.pop()
                if not stack:
                    break
                p = stack[-1]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    stop = pe[u]
                    while True:
                        e = estack.pop()
                        edge_block[e] = nblocks
                        if e == stop:
                            break
                    nblocks += 1
                    if p == root:
                        root_children += 1
                    else:
                        art[p] = 1
        if root_children >= 2:
            art[root] = 1
    return (np.array(edge_block, dtype=np.int64), nblocks,
            np.array(art, dtype=np.uint8))


def reach_count(indptr, nbr, alive, start):
    """Number of alive vertices reachable from ``start`` (0 if start is dead)."""
    al = alive.tolist()
    if not al[start]:
        return 0
    ip = indptr.tolist()
    nb = nbr.tolist()
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for j in range(ip[u], ip[u + 1]):
            w = nb[j]
            if al[w] and w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen)


def reach(indptr, nbr, alive, start):
    """uint8 mask of the alive vertices reachable from ``start``."""
    n = len(indptr) - 1
    seen = np.zeros(n, dtype=np.uint8)
    al = alive.tolist()
    if not al[start]:
        return seen
    ip = indptr.tolist()
    nb = nbr.tolist()
    mark = [0] * n
    mark[start] = 1
    todo = [start]
    while todo:
        u = todo.pop()
        for j in range(ip[u], ip[u + 1]):
            w = nb[j]
            if al[w] and not mark[w]:
                mark[w] = 1
                todo.append(w)
    seen[:] = mark
    return seen


def component_labels(indptr, nbr, alive):
    """Connected-component label per vertex (-1 for dead vertices)."""
    ip = indptr.tolist()
    nb = nbr.tolist()
    al = alive.tolist()
    n = len(ip) - 1
    lab = [-1] * n
    ncomp = 0
    for s in range(n):
        if not al[s] or lab[s] != -1:
            continue
        lab[s] = ncomp
        todo = [s]
        while todo:
            u = todo.pop()
            for j in range(ip[u], ip[u + 1]):
                w = nb[j]
                if al[w] and lab[w] == -1:
                    lab[w] = ncomp
                    todo.append(w)
        ncomp += 1
    return np.array(lab, dtype=np.int64), ncomp


def kruskal(n, eu, ev, ew):
    """Minimum spanning forest weight; edges must already be sorted by key."""
    parent = list(range(n))
    size = [1] * n
    total = 0
    for u, v, w in zip(eu.tolist(), ev.tolist(), ew.tolist()):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u == v:
            continue
        if size[u] < size[v]:
            u, v = v, u
        parent[v] = u
        size[u] += size[v]
        total += w
    return total


def _lex_smaller(b, a):
    """True if bit-set ``b`` is lexicographically smaller than ``a``."""
    d = a ^ b
    if d == 0:
        return False
    low = d & -d
    above = ~(low | (low - 1))
    if b & low:
        return (a & above) != 0
    return (b & above) == 0


def gray_maxcut(n, indptr, nbr, wts, w0, w1, fix_first):
    """Exhaustive max cut with vertex bonuses over compact vertices 0..n-1.

    Visits cuts in Gray-code order, updating the objective by one vertex flip
    per step. With ``fix_first`` vertex 0 stays on side 0. Ties resolve to
    the lexicographically smallest side-1 set. Returns ``(value, mask)``.
    """
    ip = indptr.tolist()
    nb = nbr.tolist()
    wt = wts.tolist()
    b0 = w0.tolist()
    b1 = w1.tolist()
    free = list(range(1, n)) if fix_first else list(range(n))
    side = [0] * n
    value = sum(b0)
    mask = 0
    best, best_mask = value, 0
    for i in range(1, 1 << len(free)):
        bit = (i & -i).bit_length() - 1
        v = free[bit]
        sv = side[v]
        delta = b0[v] - b1[v] if sv else b1[v] - b0[v]
        for j in range(ip[v], ip[v + 1]):
            if side[nb[j]] == sv:
                delta += wt[j]
            else:
                delta -= wt[j]
        side[v] = 1 - sv
        mask ^= 1 << v
        value += delta
        if value > best or (value == best and _lex_smaller(mask, best_mask)):
            best, best_mask = value, mask
    return best, best_mask


def ucf_scan(blk_v, blk_c, blk_ptr, blk_x, roots, base_w0, base_w1,
             sv_ptr, sv_v, sv_w, ss_i, ss_j, ss_w, lo, hi, target, early):
    """Evaluate subset placements ``mask`` in ``[lo, hi)`` on a peel plan.

    Bit ``s`` of ``mask`` puts the s-th marked vertex on side 1. Each
    evaluation builds vertex bonuses from the marked-vertex edges, peels the
    planned leaf blocks, and adds the marked-internal crossing weight.
    Returns ``(best_value, best_mask)``; with ``early`` the scan stops at the
    first mask reaching ``target``.
    """
    bv = blk_v.tolist()
    bc = blk_c.tolist()
    bp = blk_ptr.tolist()
    bx = blk_x.tolist()
    rts = roots.tolist()
    bw0 = base_w0.tolist()
    bw1 = base_w1.tolist()
    sp = sv_ptr.tolist()
    svv = sv_v.tolist()
    svw = sv_w.tolist()
    ssi, ssj, ssw = ss_i.tolist(), ss_j.tolist(), ss_w.tolist()
    nS = len(sp) - 1
    best, best_mask = None, -1
    for mask in range(lo, hi):
        w0 = list(bw0)
        w1 = list(bw1)
        for s in range(nS):
            tgt = w0 if (mask >> s) & 1 else w1
            for j in range(sp[s], sp[s + 1]):
                tgt[svv[j]] += svw[j]
        total = 0
        for i, j, w in zip(ssi, ssj, ssw):
            if ((mask >> i) ^ (mask >> j)) & 1:
                total += w
        for b in range(len(bv)):
            v = bv[b]
            c = bc[b]
            xs = bx[bp[b]:bp[b + 1]]
            k = len(xs)
            xs = sorted(xs, key=lambda x: (w0[x] - w1[x], x))
            acc = sum(w0[x] for x in xs)
            out0 = w0[v] + acc + c * 0
            out1 = w1[v] + acc + c * k
            for p in range(1, k + 1):
                x = xs[p - 1]
                acc += w1[x] - w0[x]
                val0 = w0[v] + acc + c * p * (k - p + 1)
                val1 = w1[v] + acc + c * (p + 1) * (k - p)
                if val0 > out0:
                    out0 = val0
                if val1 > out1:
                    out1 = val1
            w0[v] = out0
            w1[v] = out1
        for r in rts:
            total += w0[r] if w0[r] >= w1[r] else w1[r]
        if best is None or total > best:
            best, best_mask = total, mask
            if early and best >= target:
                break
    return best, best_mask
