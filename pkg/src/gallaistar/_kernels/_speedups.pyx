# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twin of the pure-Python kernels in ``pure.py``.

Hosts are bounded at 64 vertices (one machine word per vertex set); the
canonical form is bounded at 16 vertices.  Semantics, search order and
return shapes match the pure module exactly.
"""

import array

from cpython cimport array

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)

MODE_DECIDE = 0
MODE_ENUMERATE = 1

STATUS_COMPLETE = 0
STATUS_BUDGET = 1

DEF MAXV = 64
DEF MAXE = 2080
DEF MAXK = 33
DEF MAXN_CANON = 16

ctypedef unsigned long long u64

cdef u64 ONE = 1


# ---------------------------------------------------------------------------
# checker interpretation over the flat encoding
#
# per color: [n_checkers, (kind, payload...)*]
#   kind 0 star:    m
#   kind 1 clique:  p
#   kind 2 path:    t
#   kind 3 cycle:   t
#   kind 4 general: nv, tdeg[nv], n_anchors,
#                   (ta, tb, n_order, (tv, n_prev, prev*)*)*
# ---------------------------------------------------------------------------

cdef bint _clique_in(u64 mask, int need, u64 *adj) noexcept:
    cdef u64 m, b, sub
    cdef int w
    if need == 1:
        return mask != 0
    m = mask
    while m:
        b = m & (~m + 1)
        m ^= b
        w = __builtin_ctzll(b)
        sub = mask & adj[w] & ~((b << 1) - 1)
        if __builtin_popcountll(sub) >= need - 1 and _clique_in(sub, need - 1, adj):
            return True
    return False


cdef bint _hit_clique(int u, int v, int p, u64 *adj) noexcept:
    cdef u64 common
    if p <= 2:
        return True
    common = adj[u] & adj[v]
    if p == 3:
        return common != 0
    return __builtin_popcountll(common) >= p - 2 and _clique_in(common, p - 2, adj)


cdef bint _path_tail(int x, int rem, u64 used, u64 *adj) noexcept:
    cdef u64 m, b
    if rem == 0:
        return True
    m = adj[x] & ~used
    while m:
        b = m & (~m + 1)
        m ^= b
        if _path_tail(__builtin_ctzll(b), rem - 1, used | b, adj):
            return True
    return False


cdef bint _path_double(int x, int rem_x, int y, int rem_y, u64 used,
                       u64 *adj) noexcept:
    cdef u64 m, b
    if rem_x == 0:
        return _path_tail(y, rem_y, used, adj)
    m = adj[x] & ~used
    while m:
        b = m & (~m + 1)
        m ^= b
        if _path_double(__builtin_ctzll(b), rem_x - 1, y, rem_y, used | b, adj):
            return True
    return False


cdef bint _hit_path(int u, int v, int t, u64 *adj) noexcept:
    cdef int total = t - 2
    cdef int a
    cdef u64 used = (ONE << u) | (ONE << v)
    for a in range(total + 1):
        if _path_double(u, a, v, total - a, used, adj):
            return True
    return False


cdef bint _path_between(int a, int b, int edges_left, u64 used,
                        u64 *adj) noexcept:
    cdef u64 m, bit
    if edges_left == 1:
        return (adj[a] >> b) & 1
    m = adj[a] & ~used
    while m:
        bit = m & (~m + 1)
        m ^= bit
        if _path_between(__builtin_ctzll(bit), b, edges_left - 1, used | bit,
                         adj):
            return True
    return False


cdef bint _hit_cycle(int u, int v, int t, u64 *adj) noexcept:
    return _path_between(v, u, t - 1, (ONE << u) | (ONE << v), adj)


cdef bint _extend_general(int *spec, int off, int n_left, int *assign,
                          u64 used, int *tdeg, u64 *adj, int *deg,
                          u64 universe) noexcept:
    # spec[off] = tv, spec[off+1] = n_prev, then the prev indices
    cdef int tv, n_prev, i, w, need
    cdef u64 cand, m, b
    if n_left == 0:
        return True
    tv = spec[off]
    n_prev = spec[off + 1]
    if n_prev > 0:
        cand = adj[assign[spec[off + 2]]]
        for i in range(1, n_prev):
            cand &= adj[assign[spec[off + 2 + i]]]
        cand &= ~used
    else:
        cand = universe & ~used
    need = tdeg[tv]
    m = cand
    while m:
        b = m & (~m + 1)
        m ^= b
        w = __builtin_ctzll(b)
        if deg[w] < need:
            continue
        assign[tv] = w
        if _extend_general(spec, off + 2 + n_prev, n_left - 1, assign,
                           used | b, tdeg, adj, deg, universe):
            return True
    return False


cdef bint _hit_general(int u, int v, int *spec, u64 *adj, int *deg,
                       u64 universe) noexcept:
    # spec: nv, tdeg[nv], n_anchors, anchors...
    cdef int nv = spec[0]
    cdef int *tdeg = spec + 1
    cdef int n_anchors = spec[1 + nv]
    cdef int off = 2 + nv
    cdef int a, ta, tb, n_order, j, entry_len
    cdef int assign[MAXN_CANON]
    for a in range(n_anchors):
        ta = spec[off]
        tb = spec[off + 1]
        n_order = spec[off + 2]
        off += 3
        entry_len = 0
        for j in range(n_order):
            entry_len += 2 + spec[off + entry_len + 1]
        if deg[u] >= tdeg[ta] and deg[v] >= tdeg[tb]:
            assign[ta] = u
            assign[tb] = v
            if _extend_general(spec, off, n_order, assign,
                               (ONE << u) | (ONE << v), tdeg, adj, deg,
                               universe):
                return True
        off += entry_len
    return False


cdef bint _edge_hits_any(int u, int v, int c, int *flat, int *color_off,
                         u64 *adj_c, int *deg_c, u64 universe) noexcept:
    cdef int off = color_off[c - 1]
    cdef int n_checkers = flat[off]
    cdef int i, kind, nv, n_anchors, a, n_order, j, skip
    off += 1
    for i in range(n_checkers):
        kind = flat[off]
        if kind == 0:
            if deg_c[u] >= flat[off + 1] or deg_c[v] >= flat[off + 1]:
                return True
            off += 2
        elif kind == 1:
            if _hit_clique(u, v, flat[off + 1], adj_c):
                return True
            off += 2
        elif kind == 2:
            if _hit_path(u, v, flat[off + 1], adj_c):
                return True
            off += 2
        elif kind == 3:
            if _hit_cycle(u, v, flat[off + 1], adj_c):
                return True
            off += 2
        else:
            if _hit_general(u, v, flat + off + 1, adj_c, deg_c, universe):
                return True
            nv = flat[off + 1]
            n_anchors = flat[off + 2 + nv]
            skip = 3 + nv
            for a in range(n_anchors):
                n_order = flat[off + skip + 2]
                skip += 3
                for j in range(n_order):
                    skip += 2 + flat[off + skip + 1]
            off += skip
    return False


def _flatten_checkers(checkers):
    """Flat int encoding of the per-color checker tuples, plus offsets."""
    flat = []
    offsets = []
    for per in checkers:
        offsets.append(len(flat))
        flat.append(len(per))
        for checker in per:
            kind = checker[0]
            if kind == "star":
                flat.extend((0, checker[1]))
            elif kind == "clique":
                flat.extend((1, checker[1]))
            elif kind == "path":
                flat.extend((2, checker[1]))
            elif kind == "cycle":
                flat.extend((3, checker[1]))
            else:
                nv, tdeg, anchors = checker[1]
                if nv > MAXN_CANON:
                    raise ValueError("general targets bounded at 16 vertices")
                flat.append(4)
                flat.append(nv)
                flat.extend(tdeg)
                flat.append(len(anchors))
                for ta, tb, order in anchors:
                    flat.append(ta)
                    flat.append(tb)
                    flat.append(len(order))
                    for tv, prevs in order:
                        flat.append(tv)
                        flat.append(len(prevs))
                        flat.extend(prevs)
    return flat, offsets


def dfs_search(n, edges, k, fixed, rainbow, symbreak, checkers, mode,
               node_budget, collect_limit, prefix=None):
    """See ``pure.dfs_search``; identical contract, compiled inner loop."""
    if n > MAXV:
        raise ValueError(f"compiled kernel bounded at {MAXV} vertices")
    if k >= MAXK:
        raise ValueError(f"compiled kernel bounded at {MAXK - 1} colors")
    cdef int m = len(edges)
    if m > MAXE:
        raise ValueError("too many edges")

    flat_list, off_list = _flatten_checkers(checkers)
    cdef array.array flat_arr = array.array("i", flat_list or [0])
    cdef array.array off_arr = array.array("i", off_list)
    cdef int *flat = flat_arr.data.as_ints
    cdef int *color_off = off_arr.data.as_ints

    cdef int eu[MAXE]
    cdef int ev[MAXE]
    cdef int fixed_c[MAXE]
    cdef int cur[MAXE]
    cdef int maxc_before[MAXE]
    cdef int i
    for i in range(m):
        eu[i] = edges[i][0]
        ev[i] = edges[i][1]
        fixed_c[i] = 0
        cur[i] = 0
        maxc_before[i] = 0
    if fixed is not None:
        for i in range(m):
            fixed_c[i] = fixed[i]
    cdef int npre = 0
    if prefix:
        npre = len(prefix)
        for i in range(npre):
            fixed_c[i] = prefix[i]

    cdef unsigned char colmat[MAXV * MAXV]
    cdef u64 adj[MAXK * MAXV]
    cdef int deg[MAXK * MAXV]
    cdef u64 colored[MAXV]
    for i in range(MAXV * MAXV):
        colmat[i] = 0
    for i in range(MAXK * MAXV):
        adj[i] = 0
        deg[i] = 0
    for i in range(MAXV):
        colored[i] = 0

    cdef u64 universe = 0
    for i in range(n):
        universe |= ONE << i

    cdef bint want_rainbow = bool(rainbow)
    cdef bint want_symbreak = bool(symbreak)
    cdef int kmode = mode
    cdef long long budget = node_budget
    cdef long long nodes = 0
    cdef long long prunes = 0
    cdef long long limit_collect = collect_limit

    witness = None
    colorings = []
    frontier = None

    cdef int status = STATUS_COMPLETE
    cdef int maxc = 0
    cdef int depth = 0
    cdef int u, v, c, lo, hi, forced, w, cu, cv
    cdef u64 bu, bv, common, b
    cdef u64 *adjc
    cdef int *degc
    cdef bint placed, ok

    while True:
        if depth == m:
            if kmode == MODE_DECIDE:
                witness = [cur[i] for i in range(m)]
                break
            colorings.append(tuple([cur[i] for i in range(m)]))
            if len(colorings) >= limit_collect:
                status = STATUS_BUDGET
                break
            depth -= 1
            if depth < 0:
                break
            u = eu[depth]
            v = ev[depth]
            c = cur[depth]
            colmat[u * MAXV + v] = 0
            colmat[v * MAXV + u] = 0
            adj[c * MAXV + u] &= ~(ONE << v)
            adj[c * MAXV + v] &= ~(ONE << u)
            deg[c * MAXV + u] -= 1
            deg[c * MAXV + v] -= 1
            colored[u] &= ~(ONE << v)
            colored[v] &= ~(ONE << u)
            maxc = maxc_before[depth]
            continue
        forced = fixed_c[depth]
        if forced:
            lo = forced if cur[depth] == 0 else k + 1
            hi = forced
        else:
            lo = cur[depth] + 1
            hi = min(k, maxc + 1) if want_symbreak else k
        placed = False
        c = lo
        u = eu[depth]
        v = ev[depth]
        while c <= hi:
            nodes += 1
            if nodes > budget:
                status = STATUS_BUDGET
                frontier = _collect_frontier_c(cur, maxc_before, fixed_c,
                                               depth, c, hi, k,
                                               want_symbreak, m)
                break
            # tentatively place (u, v) = c and check
            bu = ONE << u
            bv = ONE << v
            colmat[u * MAXV + v] = <unsigned char> c
            colmat[v * MAXV + u] = <unsigned char> c
            adjc = adj + c * MAXV
            degc = deg + c * MAXV
            adjc[u] |= bv
            adjc[v] |= bu
            degc[u] += 1
            degc[v] += 1
            colored[u] |= bv
            colored[v] |= bu
            ok = True
            if want_rainbow:
                common = colored[u] & colored[v]
                while common:
                    b = common & (~common + 1)
                    common ^= b
                    w = __builtin_ctzll(b)
                    cu = colmat[u * MAXV + w]
                    cv = colmat[v * MAXV + w]
                    if cu != cv and cu != c and cv != c:
                        ok = False
                        break
            if ok and _edge_hits_any(u, v, c, flat, color_off, adjc, degc,
                                     universe):
                ok = False
            if ok:
                cur[depth] = c
                maxc_before[depth] = maxc
                if c > maxc:
                    maxc = c
                placed = True
                break
            # undo
            colmat[u * MAXV + v] = 0
            colmat[v * MAXV + u] = 0
            adjc[u] &= ~bv
            adjc[v] &= ~bu
            degc[u] -= 1
            degc[v] -= 1
            colored[u] &= ~bv
            colored[v] &= ~bu
            prunes += 1
            if forced:
                break
            c += 1
        if status == STATUS_BUDGET:
            break
        if placed:
            depth += 1
            continue
        cur[depth] = 0
        depth -= 1
        if depth < 0:
            break
        u = eu[depth]
        v = ev[depth]
        c = cur[depth]
        colmat[u * MAXV + v] = 0
        colmat[v * MAXV + u] = 0
        adj[c * MAXV + u] &= ~(ONE << v)
        adj[c * MAXV + v] &= ~(ONE << u)
        deg[c * MAXV + u] -= 1
        deg[c * MAXV + v] -= 1
        colored[u] &= ~(ONE << v)
        colored[v] &= ~(ONE << u)
        maxc = maxc_before[depth]

    return {
        "status": status,
        "witness": witness,
        "colorings": colorings,
        "nodes": nodes,
        "prunes": prunes,
        "frontier": frontier,
    }


cdef _collect_frontier_c(int *cur, int *maxc_before, int *fixed_c, int depth,
                         int c_next, int hi, int k, bint symbreak, int m):
    frontier = []
    base = [(j, cur[j]) for j in range(depth)]
    cdef int c, d, hi_d
    for c in range(c_next, hi + 1):
        frontier.append(base + [(depth, c)])
    for d in range(depth - 1, -1, -1):
        if fixed_c[d]:
            continue
        hi_d = min(k, maxc_before[d] + 1) if symbreak else k
        head = [(j, cur[j]) for j in range(d)]
        for c in range(cur[d] + 1, hi_d + 1):
            frontier.append(head + [(d, c)])
    return frontier


# ---------------------------------------------------------------------------
# canonical form under vertex x color permutations
# ---------------------------------------------------------------------------

cdef int _canon_n
cdef unsigned char _canon_mat[MAXN_CANON * MAXN_CANON]
cdef unsigned char _canon_best[MAXN_CANON * MAXN_CANON]
cdef bint _canon_have_best
cdef int _canon_m
cdef int _canon_perm[MAXN_CANON]
cdef bint _canon_used[MAXN_CANON]
cdef unsigned char _canon_seq[MAXN_CANON * MAXN_CANON]
cdef unsigned char _canon_cmap[MAXN_CANON + 1][256]
cdef int _canon_nextc[MAXN_CANON + 1]


cdef void _canon_rec(int pos, int seq_len, bint strictly_less) noexcept:
    global _canon_have_best
    cdef int x, j, c, mapped, nc, out
    cdef bint less, ok
    cdef int n = _canon_n
    for x in range(n):
        if _canon_used[x]:
            continue
        _canon_used[x] = True
        _canon_perm[pos] = x
        # extend the color map copy-on-write: copy parent map each time
        for j in range(256):
            _canon_cmap[pos + 1][j] = _canon_cmap[pos][j]
        nc = _canon_nextc[pos]
        less = strictly_less
        ok = True
        out = seq_len
        for j in range(pos):
            c = _canon_mat[x * MAXN_CANON + _canon_perm[j]]
            mapped = _canon_cmap[pos + 1][c]
            if mapped == 0:
                nc += 1
                mapped = nc
                _canon_cmap[pos + 1][c] = <unsigned char> mapped
            if not less and _canon_have_best:
                if mapped > _canon_best[out]:
                    ok = False
                    break
                if mapped < _canon_best[out]:
                    less = True
            _canon_seq[out] = <unsigned char> mapped
            out += 1
        if ok:
            if out == _canon_m:
                if not _canon_have_best:
                    _canon_have_best = True
                    for j in range(_canon_m):
                        _canon_best[j] = _canon_seq[j]
                else:
                    # compare fully: best may have shrunk since `less` was set
                    for j in range(_canon_m):
                        if _canon_seq[j] != _canon_best[j]:
                            break
                    else:
                        j = _canon_m
                    if j < _canon_m and _canon_seq[j] < _canon_best[j]:
                        for j in range(_canon_m):
                            _canon_best[j] = _canon_seq[j]
            else:
                _canon_nextc[pos + 1] = nc
                _canon_rec(pos + 1, out, less)
        _canon_used[x] = False


def canonical_coloring(n, colors):
    """See ``pure.canonical_coloring``; identical contract."""
    global _canon_n, _canon_m, _canon_have_best
    if n > MAXN_CANON:
        raise ValueError(f"compiled canonical form bounded at {MAXN_CANON}")
    if n <= 1:
        return b""
    cdef int idx = 0
    cdef int u, v, j
    for v in range(1, n):
        for u in range(v):
            _canon_mat[u * MAXN_CANON + v] = colors[idx]
            _canon_mat[v * MAXN_CANON + u] = colors[idx]
            idx += 1
    _canon_n = n
    _canon_m = idx
    _canon_have_best = False
    for j in range(n):
        _canon_used[j] = False
    for j in range(256):
        _canon_cmap[0][j] = 0
    _canon_nextc[0] = 0
    _canon_rec(0, 0, False)
    return bytes(bytearray([_canon_best[j] for j in range(_canon_m)]))
