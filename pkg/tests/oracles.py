"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive: full enumeration over colorings and
injections, no pruning, no shared code with the package's search kernels.
Only usable at tiny sizes.
"""

from __future__ import annotations

import itertools


def naive_has_mono(n, colmat, target_n, target_edges, c) -> bool:
    """Any injection of the target whose edges all carry color c."""
    for img in itertools.permutations(range(n), target_n):
        if all(colmat[img[u]][img[v]] == c for u, v in target_edges):
            return True
    return False


def naive_has_rainbow(n, colmat) -> bool:
    for u in range(n):
        for v in range(u + 1, n):
            for w in range(v + 1, n):
                a, b, c = colmat[u][v], colmat[u][w], colmat[v][w]
                if 0 in (a, b, c):
                    continue
                if a != b and b != c and a != c:
                    return True
    return False


def _colmat(n, edges, coloring):
    mat = [[0] * n for _ in range(n)]
    for (u, v), c in zip(edges, coloring):
        mat[u][v] = mat[v][u] = c
    return mat


def complete_edges(n):
    return [(u, v) for v in range(1, n) for u in range(v)]


def star_host_edges(n_clique, s):
    edges = complete_edges(n_clique)
    edges.extend((a, n_clique) for a in range(s))
    return edges


def naive_arrows(n_vertices, edges, k, targets_per_color, rainbow) -> bool:
    """Exhaustive check over all k^|edges| colorings; True iff every coloring
    is hit by a rainbow triangle (when flagged) or some mono target."""
    for coloring in itertools.product(range(1, k + 1), repeat=len(edges)):
        mat = _colmat(n_vertices, edges, coloring)
        if rainbow and naive_has_rainbow(n_vertices, mat):
            continue
        hit = False
        for c in range(1, k + 1):
            for tn, te in targets_per_color[c - 1]:
                if naive_has_mono(n_vertices, mat, tn, te, c):
                    hit = True
                    break
            if hit:
                break
        if not hit:
            return False
    return True


def naive_ramsey2(target_n, target_edges, n_max=6) -> int:
    spec = [[(target_n, target_edges)]] * 2
    for n in range(2, n_max + 1):
        if naive_arrows(n, complete_edges(n), 2, spec, False):
            return n
    raise AssertionError("not found within bound")


def naive_star_critical2(target_n, target_edges, r2) -> int:
    spec = [[(target_n, target_edges)]] * 2
    for s in range(0, r2):
        if naive_arrows(r2, star_host_edges(r2 - 1, s), 2, spec, False):
            return s
    raise AssertionError("threshold inconsistent")
