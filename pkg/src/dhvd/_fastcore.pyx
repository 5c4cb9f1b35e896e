"""Compiled kernels for the solver's hot inner loops (bitset adjacency).

Same API as dhvd._purecore; see that module for contracts.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef unsigned long long u64

BACKEND = "fast"

cdef extern from *:
    """
    static inline int popcount64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int popcount64(u64 x) nogil
    int ctz64(u64 x) nogil


cdef inline int _count(u64* row, int W) nogil:
    cdef int w, c = 0
    for w in range(W):
        c += popcount64(row[w])
    return c


cdef inline bint _eq(u64* a, u64* b, int W) nogil:
    cdef int w
    for w in range(W):
        if a[w] != b[w]:
            return 0
    return 1


cdef int _pack(object bits, object extra_masks, u64** out_adj, u64** out_masks, int* out_W):
    """Pack python int rows + extra masks into word arrays; returns n."""
    cdef int n = len(bits)
    cdef int nm = len(extra_masks)
    cdef int W = 1
    cdef object big = 0
    for row in bits:
        big |= row
    for m in extra_masks:
        big |= m
    big |= 1 << n
    W = (int(big).bit_length() + 63) // 64
    cdef u64* adj = <u64*> malloc(n * W * sizeof(u64))
    cdef u64* masks = <u64*> malloc((nm if nm else 1) * W * sizeof(u64))
    cdef int i, w
    cdef object r
    for i in range(n):
        r = bits[i]
        for w in range(W):
            adj[i * W + w] = <u64> ((r >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
    for i in range(nm):
        r = extra_masks[i]
        for w in range(W):
            masks[i * W + w] = <u64> ((r >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
    out_adj[0] = adj
    out_masks[0] = masks
    out_W[0] = W
    return n


cdef bint _is_dh(u64* adj, int n, int W, u64* mask, u64* work) nogil:
    """Elimination check on the induced subgraph; work needs (n+2)*W words."""
    cdef u64* rows = work
    cdef u64* live = work + n * W
    cdef u64* tmp = work + (n + 1) * W
    cdef int v, u, w, d, count
    cdef u64 bit
    count = 0
    for w in range(W):
        live[w] = mask[w]
    for v in range(n):
        if live[v >> 6] >> (v & 63) & 1:
            count += 1
            for w in range(W):
                rows[v * W + w] = adj[v * W + w] & mask[w]
    if count <= 2:
        return 1
    cdef bint removed
    cdef int found_u, found_v
    while count > 1:
        removed = 0
        # isolated / pendant pass
        for v in range(n):
            if not (live[v >> 6] >> (v & 63) & 1):
                continue
            d = _count(rows + v * W, W)
            if d <= 1:
                if d == 1:
                    for w in range(W):
                        if rows[v * W + w]:
                            u = 64 * w + ctz64(rows[v * W + w])
                            break
                    rows[u * W + (v >> 6)] &= ~(<u64>1 << (v & 63))
                live[v >> 6] &= ~(<u64>1 << (v & 63))
                for w in range(W):
                    rows[v * W + w] = 0
                count -= 1
                removed = 1
        if count <= 1:
            return 1
        # twin pass: first pair with equal rows outside {u,v}
        found_u = -1
        for v in range(n):
            if not (live[v >> 6] >> (v & 63) & 1):
                continue
            for u in range(v + 1, n):
                if not (live[u >> 6] >> (u & 63) & 1):
                    continue
                for w in range(W):
                    tmp[w] = rows[v * W + w] ^ rows[u * W + w]
                tmp[v >> 6] &= ~(<u64>1 << (v & 63))
                tmp[u >> 6] &= ~(<u64>1 << (u & 63))
                d = 0
                for w in range(W):
                    if tmp[w]:
                        d = 1
                        break
                if d == 0:
                    found_u = u
                    break
            if found_u >= 0:
                break
        if found_u >= 0:
            v = found_u
            for w in range(W):
                tmp[w] = rows[v * W + w]
            for w in range(W):
                rows[v * W + w] = 0
            live[v >> 6] &= ~(<u64>1 << (v & 63))
            for u in range(n):
                if tmp[u >> 6] >> (u & 63) & 1:
                    rows[u * W + (v >> 6)] &= ~(<u64>1 << (v & 63))
            count -= 1
            removed = 1
        if not removed:
            return 0
    return 1


def is_dh_mask(bits, mask):
    cdef u64* adj
    cdef u64* masks
    cdef int W
    cdef int n = _pack(bits, [mask], &adj, &masks, &W)
    cdef u64* work = <u64*> malloc((n + 2) * W * sizeof(u64))
    cdef bint res = _is_dh(adj, n, W, masks, work)
    free(adj)
    free(masks)
    free(work)
    return bool(res)


def elim_order(bits, mask):
    """Mirror of _purecore.elim_order (python-level loop; not a hot path)."""
    from . import _purecore
    return _purecore.elim_order(bits, mask)


def b1_scan(bits, s_mask, free, min_size=1, max_size=5):
    cdef u64* adj
    cdef u64* masks
    cdef int W
    cdef int n = _pack(bits, [s_mask], &adj, &masks, &W)
    cdef u64* work = <u64*> malloc((n + 3) * W * sizeof(u64))
    cdef u64* cur = work + (n + 2) * W
    cdef int f = len(free)
    cdef int* fr = <int*> malloc((f if f else 1) * sizeof(int))
    cdef int i
    for i in range(f):
        fr[i] = free[i]
    cdef int t, j, v, w
    cdef int idx[5]
    cdef object result = None
    cdef bint bad
    for t in range(min_size, max_size + 1):
        if t > f:
            break
        for j in range(t):
            idx[j] = j
        while True:
            for w in range(W):
                cur[w] = masks[w]
            for j in range(t):
                v = fr[idx[j]]
                cur[v >> 6] |= <u64>1 << (v & 63)
            bad = not _is_dh(adj, n, W, cur, work)
            if bad:
                result = tuple([fr[idx[j]] for j in range(t)])
                break
            # next combination
            j = t - 1
            while j >= 0 and idx[j] == f - t + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for i in range(j + 1, t):
                idx[i] = idx[i - 1] + 1
        if result is not None:
            break
    free(adj)
    free(masks)
    free(work)
    free(fr)
    return result


def b2_scan(bits, s_mask, free, comp_id, max_size=5):
    cdef u64* adj
    cdef u64* masks
    cdef int W
    cdef int n = _pack(bits, [s_mask], &adj, &masks, &W)
    cdef int f = len(free)
    cdef int* fr = <int*> malloc((f if f else 1) * sizeof(int))
    cdef int* cid = <int*> malloc(n * sizeof(int))
    cdef int i
    for i in range(f):
        fr[i] = free[i]
    for i in range(n):
        cid[i] = comp_id[i]
    cdef int t, j, v, w, u, c, seen
    cdef int idx[5]
    cdef int xs[5]
    cdef u64 conn, frontier, nxt, xbit
    cdef object result = None
    cdef bint hit, allw
    cdef u64* xmask = <u64*> malloc(W * sizeof(u64))
    cdef u64* row
    for t in range(1, max_size + 1):
        if t > f:
            break
        for j in range(t):
            idx[j] = j
        while True:
            for j in range(t):
                xs[j] = fr[idx[j]]
            # connectivity of G[X] (t <= 5: tiny adjacency matrix walk)
            hit = 1
            if t > 1:
                memset(xmask, 0, W * sizeof(u64))
                for j in range(t):
                    xmask[xs[j] >> 6] |= <u64>1 << (xs[j] & 63)
                conn = <u64>1  # bit j of conn = xs[j] reached
                allw = 0
                while not allw:
                    nxt = conn
                    for j in range(t):
                        if conn >> j & 1:
                            row = adj + xs[j] * W
                            for i in range(t):
                                if not (nxt >> i & 1):
                                    if row[xs[i] >> 6] >> (xs[i] & 63) & 1:
                                        nxt |= <u64>1 << i
                    if nxt == conn:
                        break
                    conn = nxt
                    allw = conn == (<u64>1 << t) - 1
                if conn != (<u64>1 << t) - 1:
                    hit = 0
            if hit:
                # do S-neighbors of X meet >= 2 components of G[S]?
                seen = -1
                hit = 0
                for j in range(t):
                    row = adj + xs[j] * W
                    for w in range(W):
                        nxt = row[w] & masks[w]
                        while nxt:
                            u = 64 * w + ctz64(nxt)
                            nxt &= nxt - 1
                            c = cid[u]
                            if seen < 0:
                                seen = c
                            elif c != seen:
                                hit = 1
                                break
                        if hit:
                            break
                    if hit:
                        break
            if hit:
                result = tuple([xs[j] for j in range(t)])
                break
            j = t - 1
            while j >= 0 and idx[j] == f - t + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for i in range(j + 1, t):
                idx[i] = idx[i - 1] + 1
        if result is not None:
            break
    free(adj)
    free(masks)
    free(fr)
    free(cid)
    free(xmask)
    return result


def r3_ok(bits, live, s_mask, v):
    cdef u64* adj
    cdef u64* masks
    cdef int W
    cdef int n = _pack(bits, [live, s_mask], &adj, &masks, &W)
    cdef u64* lv = masks
    cdef u64* sm = masks + W
    cdef u64* nv = <u64*> malloc(5 * W * sizeof(u64))
    cdef u64* r2 = nv + W
    cdef u64* r4 = nv + 2 * W
    cdef u64* p1c = nv + 3 * W
    cdef u64* p5c = nv + 4 * W
    cdef int w, i2, i4, p2, p4, p1, u
    cdef u64 x, y
    cdef bint ok = 1, any1, any5, viol
    cdef int vi = v
    cdef int nn = 0
    cdef int* nbrs = <int*> malloc(n * sizeof(int))
    for w in range(W):
        nv[w] = adj[vi * W + w] & lv[w]
    for w in range(W):
        x = nv[w]
        while x:
            nbrs[nn] = 64 * w + ctz64(x)
            nn += 1
            x &= x - 1
    viol = 0
    for i2 in range(nn):
        if viol:
            break
        p2 = nbrs[i2]
        for w in range(W):
            r2[w] = adj[p2 * W + w] & lv[w]
        for i4 in range(i2 + 1, nn):
            p4 = nbrs[i4]
            if r2[p4 >> 6] >> (p4 & 63) & 1:
                continue
            for w in range(W):
                r4[w] = adj[p4 * W + w] & lv[w]
            # bypassing vertex: common S-neighbor of p2 and p4
            x = 0
            for w in range(W):
                x |= r2[w] & r4[w] & sm[w]
            if x:
                continue
            any1 = 0
            any5 = 0
            for w in range(W):
                p1c[w] = r2[w] & ~nv[w] & ~r4[w]
                p5c[w] = r4[w] & ~nv[w] & ~r2[w]
            p1c[vi >> 6] &= ~(<u64>1 << (vi & 63))
            p5c[vi >> 6] &= ~(<u64>1 << (vi & 63))
            p1c[p4 >> 6] &= ~(<u64>1 << (p4 & 63))
            p5c[p2 >> 6] &= ~(<u64>1 << (p2 & 63))
            for w in range(W):
                if p1c[w]:
                    any1 = 1
                if p5c[w]:
                    any5 = 1
            if not any1 or not any5:
                continue
            # p1 in r2 and p5c excludes r2, so p1 never collides with p5
            for w in range(W):
                x = p1c[w]
                while x:
                    p1 = 64 * w + ctz64(x)
                    x &= x - 1
                    y = 0
                    for u in range(W):
                        y |= p5c[u] & ~adj[p1 * W + u]
                    if y:
                        viol = 1
                        break
                if viol:
                    break
            if viol:
                break
        if viol:
            break
    free(adj)
    free(masks)
    free(nv)
    free(nbrs)
    return not viol
