# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels.py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8
ctypedef unsigned long long u64

cnp.import_array()


def biconnected(const i64[::1] indptr, const i64[::1] nbr, const i64[::1] eid,
                const u8[::1] alive, const i64[::1] roots, Py_ssize_t m):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    edge_block_arr = np.full(m, -1, dtype=np.int64)
    art_arr = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] edge_block = edge_block_arr
    cdef u8[::1] art = art_arr
    disc_arr = np.full(n, -1, dtype=np.int64)
    low_arr = np.zeros(n, dtype=np.int64)
    pe_arr = np.full(n, -1, dtype=np.int64)
    it_arr = np.zeros(n, dtype=np.int64)
    stack_arr = np.zeros(n + 1, dtype=np.int64)
    estack_arr = np.zeros(m + 1, dtype=np.int64)
    cdef i64[::1] disc = disc_arr, low = low_arr, pe = pe_arr, it = it_arr
    cdef i64[::1] stack = stack_arr, estack = estack_arr
    cdef Py_ssize_t sp, esp, ri, nroots
    cdef i64 t = 0, nblocks = 0, root, u, w, e, j, p, stop, root_children
    cdef bint all_roots = roots.shape[0] == 0
    nroots = n if all_roots else roots.shape[0]
    with nogil:
        for ri in range(nroots):
            root = ri if all_roots else roots[ri]
            if not alive[root] or disc[root] != -1:
                continue
            disc[root] = t
            low[root] = t
            t += 1
            it[root] = indptr[root]
            pe[root] = -1
            sp = 0
            stack[sp] = root
            sp += 1
            esp = 0
            root_children = 0
            while sp > 0:
                u = stack[sp - 1]
                if it[u] < indptr[u + 1]:
                    j = it[u]
                    it[u] = j + 1
                    w = nbr[j]
                    e = eid[j]
                    if not alive[w] or e == pe[u]:
                        continue
                    if disc[w] == -1:
                        pe[w] = e
                        disc[w] = t
                        low[w] = t
                        t += 1
                        it[w] = indptr[w]
                        estack[esp] = e
                        esp += 1
                        stack[sp] = w
                        sp += 1
                    elif disc[w] < disc[u]:
                        if disc[w] < low[u]:
                            low[u] = disc[w]
                        estack[esp] = e
                        esp += 1
                else:
                    sp -= 1
                    if sp == 0:
                        break
                    p = stack[sp - 1]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        stop = pe[u]
                        while True:
                            esp -= 1
                            e = estack[esp]
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
    return edge_block_arr, int(nblocks), art_arr


def reach_count(const i64[::1] indptr, const i64[::1] nbr, const u8[::1] alive,
                i64 start):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    if not alive[start]:
        return 0
    seen_arr = np.zeros(n, dtype=np.uint8)
    todo_arr = np.zeros(n + 1, dtype=np.int64)
    cdef u8[::1] seen = seen_arr
    cdef i64[::1] todo = todo_arr
    cdef Py_ssize_t top = 0
    cdef i64 count = 1, u, w, j
    with nogil:
        seen[start] = 1
        todo[0] = start
        top = 1
        while top > 0:
            top -= 1
            u = todo[top]
            for j in range(indptr[u], indptr[u + 1]):
                w = nbr[j]
                if alive[w] and not seen[w]:
                    seen[w] = 1
                    count += 1
                    todo[top] = w
                    top += 1
    return int(count)


def reach(const i64[::1] indptr, const i64[::1] nbr, const u8[::1] alive,
          i64 start):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    seen_arr = np.zeros(n, dtype=np.uint8)
    if not alive[start]:
        return seen_arr
    todo_arr = np.zeros(n + 1, dtype=np.int64)
    cdef u8[::1] seen = seen_arr
    cdef i64[::1] todo = todo_arr
    cdef Py_ssize_t top
    cdef i64 u, w, j
    with nogil:
        seen[start] = 1
        todo[0] = start
        top = 1
        while top > 0:
            top -= 1
            u = todo[top]
            for j in range(indptr[u], indptr[u + 1]):
                w = nbr[j]
                if alive[w] and not seen[w]:
                    seen[w] = 1
                    todo[top] = w
                    top += 1
    return seen_arr


def component_labels(const i64[::1] indptr, const i64[::1] nbr,
                     const u8[::1] alive):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    lab_arr = np.full(n, -1, dtype=np.int64)
    todo_arr = np.zeros(n + 1, dtype=np.int64)
    cdef i64[::1] lab = lab_arr
    cdef i64[::1] todo = todo_arr
    cdef Py_ssize_t top, s
    cdef i64 ncomp = 0, u, w, j
    with nogil:
        for s in range(n):
            if not alive[s] or lab[s] != -1:
                continue
            lab[s] = ncomp
            todo[0] = s
            top = 1
            while top > 0:
                top -= 1
                u = todo[top]
                for j in range(indptr[u], indptr[u + 1]):
                    w = nbr[j]
                    if alive[w] and lab[w] == -1:
                        lab[w] = ncomp
                        todo[top] = w
                        top += 1
            ncomp += 1
    return lab_arr, int(ncomp)


def kruskal(Py_ssize_t n, const i64[::1] eu, const i64[::1] ev,
            const i64[::1] ew):
    parent_arr = np.arange(n, dtype=np.int64)
    size_arr = np.ones(n, dtype=np.int64)
    cdef i64[::1] parent = parent_arr, size = size_arr
    cdef Py_ssize_t k
    cdef i64 u, v, tmp, total = 0
    with nogil:
        for k in range(eu.shape[0]):
            u = eu[k]
            v = ev[k]
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u == v:
                continue
            if size[u] < size[v]:
                tmp = u
                u = v
                v = tmp
            parent[v] = u
            size[u] += size[v]
            total += ew[k]
    return int(total)


cdef inline bint _lex_smaller(u64 b, u64 a) nogil:
    cdef u64 d = a ^ b
    cdef u64 low, above
    if d == 0:
        return False
    low = d & (~d + 1)
    above = ~(low | (low - 1))
    if b & low:
        return (a & above) != 0
    return (b & above) == 0


def gray_maxcut(Py_ssize_t n, const i64[::1] indptr, const i64[::1] nbr,
                const i64[::1] wts, const i64[::1] w0, const i64[::1] w1,
                bint fix_first):
    if n > 62:
        raise ValueError("gray_maxcut supports at most 62 vertices")
    side_arr = np.zeros(max(n, 1), dtype=np.uint8)
    cdef u8[::1] side = side_arr
    cdef Py_ssize_t offset = 1 if fix_first else 0
    cdef Py_ssize_t nfree = n - offset if n > offset else 0
    cdef u64 i, limit = (<u64>1) << nfree
    cdef u64 mask = 0, best_mask = 0
    cdef i64 value = 0, best, delta
    cdef Py_ssize_t v, j, bit
    cdef u8 sv
    for v in range(n):
        value += w0[v]
    best = value
    with nogil:
        i = 1
        while i < limit:
            bit = 0
            while not ((i >> bit) & 1):
                bit += 1
            v = bit + offset
            sv = side[v]
            if sv:
                delta = w0[v] - w1[v]
            else:
                delta = w1[v] - w0[v]
            for j in range(indptr[v], indptr[v + 1]):
                if side[nbr[j]] == sv:
                    delta += wts[j]
                else:
                    delta -= wts[j]
            side[v] = 1 - sv
            mask ^= (<u64>1) << v
            value += delta
            if value > best or (value == best and _lex_smaller(mask, best_mask)):
                best = value
                best_mask = mask
            i += 1
    return int(best), int(best_mask)


def ucf_scan(const i64[::1] blk_v, const i64[::1] blk_c, const i64[::1] blk_ptr,
             const i64[::1] blk_x, const i64[::1] roots,
             const i64[::1] base_w0, const i64[::1] base_w1,
             const i64[::1] sv_ptr, const i64[::1] sv_v, const i64[::1] sv_w,
             const i64[::1] ss_i, const i64[::1] ss_j, const i64[::1] ss_w,
             i64 lo, i64 hi, i64 target, bint early):
    cdef Py_ssize_t nv = base_w0.shape[0]
    cdef Py_ssize_t nb = blk_v.shape[0]
    cdef Py_ssize_t nS = sv_ptr.shape[0] - 1
    w0_arr = np.zeros(max(nv, 1), dtype=np.int64)
    w1_arr = np.zeros(max(nv, 1), dtype=np.int64)
    order_arr = np.zeros(max(blk_x.shape[0], 1), dtype=np.int64)
    cdef i64[::1] w0 = w0_arr, w1 = w1_arr, order = order_arr
    cdef i64 mask, total, best = 0, best_mask = -1, acc, out0, out1, val0, val1
    cdef i64 c, v, x, y, key, p, k
    cdef Py_ssize_t s, j, b, q, r, start
    cdef bint have = False
    with nogil:
        mask = lo
        while mask < hi:
            for q in range(nv):
                w0[q] = base_w0[q]
                w1[q] = base_w1[q]
            for s in range(nS):
                if (mask >> s) & 1:
                    for j in range(sv_ptr[s], sv_ptr[s + 1]):
                        w0[sv_v[j]] += sv_w[j]
                else:
                    for j in range(sv_ptr[s], sv_ptr[s + 1]):
                        w1[sv_v[j]] += sv_w[j]
            total = 0
            for j in range(ss_i.shape[0]):
                if ((mask >> ss_i[j]) ^ (mask >> ss_j[j])) & 1:
                    total += ss_w[j]
            for b in range(nb):
                v = blk_v[b]
                c = blk_c[b]
                start = blk_ptr[b]
                k = blk_ptr[b + 1] - start
                # insertion sort by (w0 - w1, id): O(k^2) = O(edges of the clique)
                for q in range(k):
                    x = blk_x[start + q]
                    key = w0[x] - w1[x]
                    r = q
                    while r > 0:
                        y = order[start + r - 1]
                        if (w0[y] - w1[y] > key) or (w0[y] - w1[y] == key and y > x):
                            order[start + r] = y
                            r -= 1
                        else:
                            break
                    order[start + r] = x
                acc = 0
                for q in range(k):
                    acc += w0[order[start + q]]
                out0 = w0[v] + acc
                out1 = w1[v] + acc + c * k
                for p in range(1, k + 1):
                    x = order[start + p - 1]
                    acc += w1[x] - w0[x]
                    val0 = w0[v] + acc + c * p * (k - p + 1)
                    val1 = w1[v] + acc + c * (p + 1) * (k - p)
                    if val0 > out0:
                        out0 = val0
                    if val1 > out1:
                        out1 = val1
                w0[v] = out0
                w1[v] = out1
            for q in range(roots.shape[0]):
                r = roots[q]
                total += w0[r] if w0[r] >= w1[r] else w1[r]
            if not have or total > best:
                have = True
                best = total
                best_mask = mask
                if early and best >= target:
                    break
            mask += 1
    if not have:
        return None, -1
    return int(best), int(best_mask)
