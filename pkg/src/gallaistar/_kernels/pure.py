"""Pure-Python implementations of the hot kernels.

Two entry points are exposed and mirrored by the compiled extension in
``_speedups.pyx``:

``dfs_search``
    Depth-first search over edge colorings of a host graph with incremental
    rainbow-triangle and monochromatic-target pruning.

``canonical_coloring``
    Exact canonical form of a complete-graph edge coloring under combined
    vertex and color permutations, by pruned search over vertex orderings.

Vertex sets are represented as integer bitmasks throughout.
"""

from __future__ import annotations

MODE_DECIDE = 0
MODE_ENUMERATE = 1

STATUS_COMPLETE = 0
STATUS_BUDGET = 1


# ---------------------------------------------------------------------------
# monochromatic-target checks through a newly colored edge
# ---------------------------------------------------------------------------

def _clique_in(mask, need, adj):
    # need >= 2: look for an ascending clique of that size inside mask
    if need == 1:
        return mask != 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        w = b.bit_length() - 1
        sub = mask & adj[w] & ~((b << 1) - 1)
        if sub.bit_count() >= need - 1 and _clique_in(sub, need - 1, adj):
            return True
    return False


def _hit_clique(u, v, p, adj):
    if p <= 2:
        return True
    common = adj[u] & adj[v]
    if p == 3:
        return common != 0
    return common.bit_count() >= p - 2 and _clique_in(common, p - 2, adj)


def _path_tail(x, rem, used, adj):
    if rem == 0:
        return True
    m = adj[x] & ~used
    while m:
        b = m & -m
        m ^= b
        if _path_tail(b.bit_length() - 1, rem - 1, used | b, adj):
            return True
    return False


def _path_double(x, rem_x, y, rem_y, used, adj):
    if rem_x == 0:
        return _path_tail(y, rem_y, used, adj)
    m = adj[x] & ~used
    while m:
        b = m & -m
        m ^= b
        if _path_double(b.bit_length() - 1, rem_x - 1, y, rem_y, used | b, adj):
            return True
    return False


def _hit_path(u, v, t, adj):
    # a path on t vertices whose edge set uses the edge (u, v)
    total = t - 2
    used = (1 << u) | (1 << v)
    for a in range(total + 1):
        if _path_double(u, a, v, total - a, used, adj):
            return True
    return False


def _path_between(a, b, edges_left, used, adj):
    if edges_left == 1:
        return (adj[a] >> b) & 1
    m = adj[a] & ~used
    while m:
        bit = m & -m
        m ^= bit
        if _path_between(bit.bit_length() - 1, b, edges_left - 1, used | bit, adj):
            return True
    return False


def _hit_cycle(u, v, t, adj):
    # a cycle on t vertices through the edge (u, v): close a path v -> u
    return bool(_path_between(v, u, t - 1, (1 << u) | (1 << v), adj))


def _hit_general(u, v, spec, adj, deg, universe):
    # spec: (nv, tdeg, anchors); anchors are (ta, tb, order) with order entries
    # (tv, prevs).  The new edge (u, v) must carry the image of some target edge.
    _nv, tdeg, anchors = spec
    bu = 1 << u
    bv = 1 << v
    for ta, tb, order in anchors:
        if deg[u] < tdeg[ta] or deg[v] < tdeg[tb]:
            continue
        assign = {ta: u, tb: v}
        if _extend_general(order, 0, assign, bu | bv, tdeg, adj, deg, universe):
            return True
    return False


def _extend_general(order, idx, assign, used, tdeg, adj, deg, universe):
    if idx == len(order):
        return True
    tv, prevs = order[idx]
    if prevs:
        cand = adj[assign[prevs[0]]]
        for p in prevs[1:]:
            cand &= adj[assign[p]]
        cand &= ~used
    else:
        cand = universe & ~used  # free vertex of a later target component
    need = tdeg[tv]
    m = cand
    while m:
        b = m & -m
        m ^= b
        w = b.bit_length() - 1
        if deg[w] < need:
            continue
        assign[tv] = w
        if _extend_general(order, idx + 1, assign, used | b, tdeg, adj, deg,
                           universe):
            return True
        del assign[tv]
    return False


def _edge_hits_target(u, v, checker, adj, deg, universe):
    kind = checker[0]
    if kind == "star":
        return deg[u] >= checker[1] or deg[v] >= checker[1]
    if kind == "clique":
        return _hit_clique(u, v, checker[1], adj)
    if kind == "path":
        return _hit_path(u, v, checker[1], adj)
    if kind == "cycle":
        return _hit_cycle(u, v, checker[1], adj)
    return _hit_general(u, v, checker[1], adj, deg, universe)


# ---------------------------------------------------------------------------
# the coloring DFS
# ---------------------------------------------------------------------------

def dfs_search(n, edges, k, fixed, rainbow, symbreak, checkers, mode,
               node_budget, collect_limit, prefix=None):
    """Search all colorings of ``edges`` with colors 1..k.

    A coloring is *good* when it contains no rainbow triangle (if ``rainbow``)
    and, for every color c, none of the targets in ``checkers[c-1]``.

    Args:
        n: number of host vertices (at most 64 in the compiled twin).
        edges: assignment-ordered (u, v) pairs.
        k: palette size.
        fixed: per-edge preset color (0 = free), or None.
        rainbow: prune assignments that close a rainbow triangle.
        symbreak: restrict color choices to first-use order; only sound when
            all colors carry identical targets and no edge is preset.
        checkers: per-color tuples of target checkers.
        mode: MODE_DECIDE stops at the first good coloring, MODE_ENUMERATE
            collects every good coloring (up to collect_limit).
        node_budget: bound on attempted assignments.
        collect_limit: cap on collected colorings in enumerate mode.
        prefix: optional list of colors forced onto the first edges.

    Returns a dict with keys ``status``, ``witness``, ``colorings``, ``nodes``,
    ``prunes`` and ``frontier`` (unexplored prefixes on budget exhaustion).
    """
    m = len(edges)
    universe = (1 << n) - 1
    colmat = [[0] * n for _ in range(n)]
    adj = [[0] * n for _ in range(k + 1)]
    deg = [[0] * n for _ in range(k + 1)]
    colored = [0] * n

    cur = [0] * m
    maxc_before = [0] * m
    nodes = 0
    prunes = 0
    witness = None
    colorings = []
    frontier = None
    npre = len(prefix) if prefix else 0

    def limit_at(i, maxc):
        if npre and i < npre:
            return 0  # forced, handled separately
        if fixed is not None and fixed[i]:
            return 0
        return min(k, maxc + 1) if symbreak else k

    def forced_at(i):
        if npre and i < npre:
            return prefix[i]
        if fixed is not None and fixed[i]:
            return fixed[i]
        return 0

    def assign_ok(u, v, c):
        # place the edge, then test; caller unassigns on failure or backtrack
        colmat[u][v] = colmat[v][u] = c
        bu = 1 << u
        bv = 1 << v
        adjc = adj[c]
        adjc[u] |= bv
        adjc[v] |= bu
        degc = deg[c]
        degc[u] += 1
        degc[v] += 1
        colored[u] |= bv
        colored[v] |= bu
        if rainbow:
            common = colored[u] & colored[v]
            ru = colmat[u]
            rv = colmat[v]
            mm = common
            while mm:
                b = mm & -mm
                mm ^= b
                w = b.bit_length() - 1
                cu = ru[w]
                cv = rv[w]
                if cu != cv and cu != c and cv != c:
                    return False
        for checker in checkers[c - 1]:
            if _edge_hits_target(u, v, checker, adjc, degc, universe):
                return False
        return True

    def unassign(u, v, c):
        colmat[u][v] = colmat[v][u] = 0
        bu = 1 << u
        bv = 1 << v
        adj[c][u] &= ~bv
        adj[c][v] &= ~bu
        deg[c][u] -= 1
        deg[c][v] -= 1
        colored[u] &= ~bv
        colored[v] &= ~bu

    maxc = 0
    i = 0
    status = STATUS_COMPLETE
    while True:
        if i == m:
            if mode == MODE_DECIDE:
                witness = list(cur)
                break
            colorings.append(tuple(cur))
            if len(colorings) >= collect_limit:
                status = STATUS_BUDGET
                break
            i -= 1
            if i < 0:
                break
            u, v = edges[i]
            unassign(u, v, cur[i])
            maxc = maxc_before[i]
            continue
        forced = forced_at(i)
        if forced:
            lo = forced if cur[i] == 0 else k + 1  # forced edges try once
            hi = forced
        else:
            lo = cur[i] + 1
            hi = limit_at(i, maxc)
        placed = False
        c = lo
        while c <= hi:
            nodes += 1
            if nodes > node_budget:
                status = STATUS_BUDGET
                frontier = _collect_frontier(cur, i, c, hi, forced_at,
                                             limit_at, maxc_before)
                break
            u, v = edges[i]
            if assign_ok(u, v, c):
                cur[i] = c
                maxc_before[i] = maxc
                if c > maxc:
                    maxc = c
                placed = True
                break
            unassign(u, v, c)
            prunes += 1
            if forced:
                break
            c += 1
        if status == STATUS_BUDGET:
            break
        if placed:
            i += 1
            continue
        # exhausted this edge: backtrack
        cur[i] = 0
        i -= 1
        if i < 0:
            break
        u, v = edges[i]
        unassign(u, v, cur[i])
        maxc = maxc_before[i]

    return {
        "status": status,
        "witness": witness,
        "colorings": colorings,
        "nodes": nodes,
        "prunes": prunes,
        "frontier": frontier,
    }


def _collect_frontier(cur, depth, c_next, hi, forced_at, limit_at, maxc_before):
    """Unexplored prefixes: untried colors at the current depth and above."""
    frontier = []
    base = [(j, cur[j]) for j in range(depth)]
    for c in range(c_next, hi + 1):
        frontier.append(base + [(depth, c)])
    for d in range(depth - 1, -1, -1):
        if forced_at(d):
            continue
        hi_d = limit_at(d, maxc_before[d])
        head = [(j, cur[j]) for j in range(d)]
        for c in range(cur[d] + 1, hi_d + 1):
            frontier.append(head + [(d, c)])
    return frontier


# ---------------------------------------------------------------------------
# canonical form under vertex x color permutations
# ---------------------------------------------------------------------------

def canonical_coloring(n, colors):
    """Minimum color-normalized edge sequence over all vertex orderings.

    ``colors`` lists the edge colors of a complete graph in (max, min) edge
    order.  Two colorings get the same result iff they agree up to a vertex
    permutation combined with a color permutation.  Returns bytes.
    """
    if n <= 1:
        return b""
    mat = [[0] * n for _ in range(n)]
    idx = 0
    for v in range(1, n):
        for u in range(v):
            mat[u][v] = mat[v][u] = colors[idx]
            idx += 1
    m = idx
    best = None
    perm = [0] * n
    used = [False] * n

    def rec(pos, seq, cmap, nextc, strictly_less):
        nonlocal best
        for x in range(n):
            if used[x]:
                continue
            used[x] = True
            perm[pos] = x
            row = mat[x]
            ext = []
            cmap2 = None
            nc = nextc
            less = strictly_less
            ok = True
            for j in range(pos):
                c = row[perm[j]]
                mapped = cmap.get(c) if cmap2 is None else cmap2.get(c)
                if mapped is None:
                    if cmap2 is None:
                        cmap2 = dict(cmap)
                    nc += 1
                    mapped = nc
                    cmap2[c] = mapped
                if not less and best is not None:
                    b = best[len(seq) + len(ext)]
                    if mapped > b:
                        ok = False
                        break
                    if mapped < b:
                        less = True
                ext.append(mapped)
            if ok:
                seq.extend(ext)
                if len(seq) == m:
                    # best may have shrunk since `less` was set; compare fully
                    if best is None or seq < best:
                        best = list(seq)
                else:
                    rec(pos + 1, seq, cmap if cmap2 is None else cmap2, nc, less)
                del seq[len(seq) - len(ext):]
            used[x] = False

    rec(0, [], {}, 0, False)
    return bytes(best)
