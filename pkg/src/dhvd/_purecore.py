"""Pure-Python kernels for the solver's hot inner loops.

Same API as the compiled module (_fastcore); selected as a fallback by
dhvd.kernel when the extension is unavailable or DHVD_PURE is set.

All functions take adjacency as a list of int bitmasks.  Rows are expected to
reflect the current graph (callers keep deleted vertices' bits cleared).
"""

from itertools import combinations

BACKEND = "pure"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_dh_mask(bits, mask):
    """Distance-hereditary test for the subgraph induced by mask.

    Repeatedly strips isolated vertices, pendant vertices and twins; the
    graph is distance-hereditary iff this reduces it to at most one vertex
    (one-vertex-extension characterization).
    """
    live = mask
    count = live.bit_count()
    if count <= 2:
        return True
    rows = {v: bits[v] & mask for v in _bits(mask)}
    while count > 1:
        removed = False
        # isolated and pendant vertices
        for v in list(_bits(live)):
            r = rows[v]
            d = r.bit_count()
            if d <= 1:
                if d == 1:
                    u = r.bit_length() - 1
                    rows[u] &= ~(1 << v)
                live &= ~(1 << v)
                del rows[v]
                count -= 1
                removed = True
        if count <= 1:
            return True
        # twins: equal open rows (false) or equal closed rows (true)
        open_seen = {}
        closed_seen = {}
        pair = None
        for v in _bits(live):
            r = rows[v]
            if r in open_seen:
                pair = (open_seen[r], v)
                break
            open_seen[r] = v
            c = r | (1 << v)
            if c in closed_seen:
                pair = (closed_seen[c], v)
                break
            closed_seen[c] = v
        if pair is not None:
            _, v = pair
            for u in _bits(rows[v]):
                rows[u] &= ~(1 << v)
            live &= ~(1 << v)
            del rows[v]
            count -= 1
            removed = True
        if not removed:
            return False
    return True


def elim_order(bits, mask):
    """Elimination sequence for a connected distance-hereditary subgraph.

    Returns (root, ops) where ops is the removal order, each op one of
    ('pendant', z, neighbor), ('true', z, partner), ('false', z, partner);
    returns None when the subgraph is not distance-hereditary.  Input must
    be connected (isolated vertices never arise mid-run then).
    """
    live = mask
    count = live.bit_count()
    rows = {v: bits[v] & mask for v in _bits(mask)}
    ops = []
    while count > 1:
        step = None
        for v in _bits(live):
            r = rows[v]
            if r.bit_count() == 1:
                step = ("pendant", v, r.bit_length() - 1)
                break
        if step is None:
            open_seen = {}
            closed_seen = {}
            for v in _bits(live):
                r = rows[v]
                if r in open_seen:
                    step = ("false", v, open_seen[r])
                    break
                open_seen[r] = v
                c = r | (1 << v)
                if c in closed_seen:
                    step = ("true", v, closed_seen[c])
                    break
                closed_seen[c] = v
        if step is None:
            return None
        _, z, _ = step
        for u in _bits(rows[z]):
            rows[u] &= ~(1 << z)
        live &= ~(1 << z)
        del rows[z]
        count -= 1
        ops.append(step)
    root = live.bit_length() - 1 if live else -1
    return root, ops


def b1_scan(bits, s_mask, free, min_size=1, max_size=5):
    """Smallest (then lexicographic) X with G[S u X] not distance-hereditary."""
    for t in range(min_size, max_size + 1):
        for X in combinations(free, t):
            m = s_mask
            for x in X:
                m |= 1 << x
            if not is_dh_mask(bits, m):
                return X
    return None


def _connected_subset(bits, X):
    if len(X) <= 1:
        return True
    xmask = 0
    for x in X:
        xmask |= 1 << x
    comp = 1 << X[0]
    frontier = comp
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= bits[u]
        frontier = nxt & xmask & ~comp
        comp |= frontier
    return comp == xmask


def b2_scan(bits, s_mask, free, comp_id, max_size=5):
    """Smallest connected X whose S-neighborhood meets >= 2 components of G[S]."""
    for t in range(1, max_size + 1):
        for X in combinations(free, t):
            if not _connected_subset(bits, X):
                continue
            seen = -1
            hit = False
            for x in X:
                for w in _bits(bits[x] & s_mask):
                    c = comp_id[w]
                    if seen < 0:
                        seen = c
                    elif c != seen:
                        hit = True
                        break
                if hit:
                    break
            if hit:
                return X
    return None


def r3_ok(bits, live, s_mask, v):
    """True iff every induced P5 centered at v has a common S-neighbor of p2,p4.

    Vacuously true when no induced P5 is centered at v.  The bypass condition
    depends only on the (p2, p4) pair, so the scan factors through pairs.
    """
    nv = bits[v] & live
    nbrs = list(_bits(nv))
    closed_v = nv | (1 << v)
    for i, p2 in enumerate(nbrs):
        r2 = bits[p2] & live
        for p4 in nbrs[i + 1:]:
            if r2 >> p4 & 1:
                continue
            r4 = bits[p4] & live
            if r2 & r4 & s_mask:
                continue
            p1c = r2 & ~closed_v & ~r4 & ~(1 << p4)
            if not p1c:
                continue
            p5c = r4 & ~closed_v & ~r2 & ~(1 << p2)
            if not p5c:
                continue
            for p1 in _bits(p1c):
                if p5c & ~bits[p1] & ~(1 << p1):
                    return False
    return True
