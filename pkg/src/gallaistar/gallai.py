"""Vertex partitions of rainbow-triangle-free colorings of complete graphs.

A valid partition has at least two blocks, every block pair joined in a single
color, and at most two colors across all joins.  For minimal partitions with
more than two blocks, every block must see exactly two colors on its outgoing
edges (hence the block count is never three).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import EdgeColoring, HostGraph, find_rainbow_triangle
from .errors import (
    BadParameter,
    InvalidPartition,
    NotAPartition,
    RainbowTrianglePresent,
    TooLarge,
)

EXHAUSTIVE_BOUND = 12


@dataclass(frozen=True)
class GallaiPartition:
    blocks: tuple
    reduced: EdgeColoring
    between_colors: frozenset
    minimal: bool  # True only when found by exhaustive search over block counts

    @property
    def q(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class PartitionVerdict:
    ok: bool
    reason: str | None = None
    block_pair: tuple | None = None
    third_color: int | None = None


def _normalize_blocks(G: EdgeColoring, blocks):
    norm = [tuple(sorted(b)) for b in blocks]
    seen = set()
    for b in norm:
        if not b:
            raise NotAPartition("empty block")
        for v in b:
            if not 0 <= v < G.host.n:
                raise NotAPartition(f"vertex {v} outside the host")
            if v in seen:
                raise NotAPartition(f"vertex {v} in two blocks")
            seen.add(v)
    if len(seen) != G.host.n:
        raise NotAPartition("blocks do not cover the vertex set")
    return tuple(sorted(norm))


def verify_gallai_partition(G: EdgeColoring, blocks) -> PartitionVerdict:
    """Check the three partition invariants, reporting the first violation."""
    if not G.host.is_complete:
        raise BadParameter("partitions are defined over complete hosts")
    norm = _normalize_blocks(G, blocks)
    if len(norm) < 2:
        return PartitionVerdict(False, "fewer than two blocks")
    between = set()
    for i in range(len(norm)):
        for j in range(i + 1, len(norm)):
            colors = {G.color(u, v) for u in norm[i] for v in norm[j]}
            if len(colors) > 1:
                return PartitionVerdict(
                    False, f"blocks {i} and {j} joined by colors {sorted(colors)}",
                    block_pair=(i, j))
            between |= colors
            if len(between) > 2:
                c = sorted(between)[-1]
                return PartitionVerdict(
                    False, f"third color {c} between blocks",
                    block_pair=(i, j), third_color=c)
    return PartitionVerdict(True)


def reduced_coloring(G: EdgeColoring, blocks) -> EdgeColoring:
    """Complete coloring on the blocks, inheriting the unique join colors."""
    norm = _normalize_blocks(G, blocks)
    q = len(norm)
    if q < 2:
        raise InvalidPartition("need at least two blocks")
    cols = []
    for j in range(1, q):
        for i in range(j):
            colors = {G.color(u, v) for u in norm[i] for v in norm[j]}
            if len(colors) != 1:
                raise InvalidPartition(
                    f"blocks {i} and {j} joined by colors {sorted(colors)}")
            cols.append(colors.pop())
    return EdgeColoring(HostGraph.complete(q), G.k, cols)


def _greedy_coarsen(G: EdgeColoring):
    """Merge block pairs seen identically by every other block; lex-first."""
    n = G.host.n
    blocks = [[v] for v in range(n)]

    def join_color(a, b):
        return G.color(blocks[a][0], blocks[b][0])

    changed = True
    while changed and len(blocks) > 2:
        changed = False
        q = len(blocks)
        for i in range(q):
            for j in range(i + 1, q):
                if all(join_color(l, i) == join_color(l, j)
                       for l in range(q) if l not in (i, j)):
                    blocks[i] = sorted(blocks[i] + blocks[j])
                    del blocks[j]
                    changed = True
                    break
            if changed:
                break
    return [tuple(b) for b in blocks]


def _exhaustive_partition(G: EdgeColoring):
    """Smallest valid block count by pruned search over set partitions."""
    n = G.host.n
    rows = G._rows
    for q in range(2, n + 1):
        members = [[] for _ in range(q)]
        pair_color = [[0] * q for _ in range(q)]
        between = []

        def rec(v: int, used: int):
            if v == n:
                return used == q
            if used + (n - v) < q:
                return False  # not enough vertices left to open all blocks
            hi = min(used, q - 1)
            for b in range(hi + 1):
                ok = True
                touched = []
                for ob in range(used):
                    if ob == b:
                        continue
                    mem = members[ob]
                    c = rows[v][mem[0]]
                    if any(rows[v][u] != c for u in mem[1:]):
                        ok = False
                        break
                    have = pair_color[b][ob]
                    if have == 0:
                        if c not in between and len(between) == 2:
                            ok = False
                            break
                        pair_color[b][ob] = pair_color[ob][b] = c
                        touched.append((b, ob))
                        if c not in between:
                            between.append(c)
                            touched.append((-1, c))
                    elif have != c:
                        ok = False
                        break
                if ok:
                    members[b].append(v)
                    if rec(v + 1, used + (1 if b == used else 0)):
                        return True
                    members[b].pop()
                for t in touched:
                    if t[0] == -1:
                        between.remove(t[1])
                    else:
                        pair_color[t[0]][t[1]] = pair_color[t[1]][t[0]] = 0
            return False

        if rec(0, 0):
            return [tuple(m) for m in members]
    return None


def find_gallai_partition(G: EdgeColoring, minimal: bool = False,
                          exhaustive_bound: int = EXHAUSTIVE_BOUND
                          ) -> GallaiPartition:
    """A valid partition of G; the smallest block count when ``minimal``.

    Greedy coarsening from singletons is tried first.  When it leaves more
    than two colors between blocks, or when minimality is demanded, an
    exhaustive search over partitions by increasing block count takes over
    (bounded at ``exhaustive_bound`` vertices).
    """
    if not G.host.is_complete:
        raise BadParameter("partitions are defined over complete hosts")
    if G.host.n < 2:
        raise BadParameter("need at least two vertices")
    rb = find_rainbow_triangle(G)
    if rb is not None:
        raise RainbowTrianglePresent(
            f"rainbow triangle at {rb.vertices} with colors {rb.colors}")
    exhaustive = minimal
    blocks = None
    if not minimal:
        blocks = _greedy_coarsen(G)
        if not verify_gallai_partition(G, blocks).ok:
            exhaustive = True
    if exhaustive:
        if G.host.n > exhaustive_bound:
            raise TooLarge(
                f"exhaustive partition search bounded at {exhaustive_bound}")
        blocks = _exhaustive_partition(G)
        if blocks is None:
            raise RainbowTrianglePresent("no valid partition exists")
    blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
    verdict = verify_gallai_partition(G, blocks)
    assert verdict.ok, verdict.reason
    reduced = reduced_coloring(G, blocks)
    between = frozenset(reduced.colors)
    return GallaiPartition(blocks, reduced, between, exhaustive)


def outgoing_colors(G: EdgeColoring, blocks, i: int) -> frozenset:
    """Colors on the edges leaving block i."""
    norm = _normalize_blocks(G, blocks)
    inside = set(norm[i])
    out = set()
    for u in norm[i]:
        for v in range(G.host.n):
            if v not in inside:
                out.add(G.color(u, v))
    return frozenset(out)


def parse_partition(text: str) -> list:
    """Blocks as semicolon-separated comma lists, e.g. ``0,1;2;3,4``."""
    blocks = []
    for chunk in text.strip().split(";"):
        if chunk.strip() == "":
            continue
        blocks.append(tuple(int(x) for x in chunk.split(",")))
    return blocks


def format_partition(blocks) -> str:
    return ";".join(",".join(str(v) for v in b) for b in blocks)


def random_gallai_coloring(n: int, k: int, rng: random.Random,
                           allow_mono: bool = True) -> EdgeColoring:
    """Random rainbow-triangle-free coloring built from nested two-color seeds."""
    if n < 1:
        raise BadParameter("need at least one vertex")
    colors = _random_gallai_rec(n, k, rng, allow_mono)
    return EdgeColoring(HostGraph.complete(n), k, colors)


def _random_gallai_rec(n: int, k: int, rng: random.Random, allow_mono: bool):
    """Edge colors of a random Gallai coloring of K_n, in canonical edge order."""
    if n == 1:
        return []
    q = rng.randint(2, min(n, 5))
    cuts = sorted(rng.sample(range(1, n), q - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    if k >= 2 and (not allow_mono or rng.random() < 0.8):
        pair = rng.sample(range(1, k + 1), 2)
    else:
        c = rng.randint(1, k)
        pair = [c, c]
    offsets = [sum(sizes[:i]) for i in range(q)]
    inner = [_random_gallai_rec(s, k, rng, allow_mono) for s in sizes]
    mat = [[0] * n for _ in range(n)]
    for bi in range(q):
        base = offsets[bi]
        s = sizes[bi]
        idx = 0
        for v in range(1, s):
            for u in range(v):
                mat[base + u][base + v] = inner[bi][idx]
                idx += 1
    for bi in range(q):
        for bj in range(bi + 1, q):
            c = rng.choice(pair)
            for u in range(offsets[bi], offsets[bi] + sizes[bi]):
                for v in range(offsets[bj], offsets[bj] + sizes[bj]):
                    mat[u][v] = c
    return [mat[u][v] for v in range(1, n) for u in range(v)]
