"""Edge-colored host graphs and detection primitives.

Hosts are complete graphs K_n or a clique K_{n-1} joined to one extra center
vertex by a partial star.  Colors are 1-based integers from the palette [k];
vertices are 0-based.  Edge order everywhere is "by max endpoint, then min
endpoint", so the edges of each complete prefix K_m come before any edge
touching vertex m.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import (
    BadParameter,
    ColorOutOfRange,
    Disconnected,
    DuplicateEdge,
    EdgeNotInHost,
    MissingEdge,
    TooLarge,
)

Edge = tuple[int, int]

CANONICAL_BOUND = 10


def _lsb(x: int) -> int:
    return (x & -x).bit_length() - 1


# ---------------------------------------------------------------------------
# hosts
# ---------------------------------------------------------------------------

COMPLETE = "complete"
STAR_EXTENSION = "star_extension"


@dataclass(frozen=True)
class HostGraph:
    """A complete graph, or a clique plus a partial star to one new center."""

    kind: str
    n: int
    star_size: int = 0
    attachment: frozenset = frozenset()

    @staticmethod
    def complete(n: int) -> "HostGraph":
        if n < 1:
            raise BadParameter(f"complete host needs n >= 1, got {n}")
        return HostGraph(COMPLETE, n)

    @staticmethod
    def star_extension(clique_order: int, star_size: int,
                       attachment=None) -> "HostGraph":
        if clique_order < 1:
            raise BadParameter("clique order must be positive")
        if not 0 <= star_size <= clique_order:
            raise BadParameter(
                f"star size {star_size} outside 0..{clique_order}")
        if attachment is None:
            attachment = range(star_size)
        att = frozenset(attachment)
        if len(att) != star_size:
            raise BadParameter("attachment size does not match star size")
        if not all(0 <= a < clique_order for a in att):
            raise BadParameter("attachment must be a set of clique vertices")
        return HostGraph(STAR_EXTENSION, clique_order + 1, star_size, att)

    @property
    def is_complete(self) -> bool:
        return self.kind == COMPLETE

    @property
    def clique_order(self) -> int:
        return self.n if self.is_complete else self.n - 1

    @property
    def center(self):
        return None if self.is_complete else self.n - 1

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        if self.is_complete:
            return True
        c = self.n - 1
        if u == c:
            return v in self.attachment
        if v == c:
            return u in self.attachment
        return True

    def edges(self) -> list[Edge]:
        out = [(u, v) for v in range(1, self.clique_order)
               for u in range(v)]
        if not self.is_complete:
            c = self.n - 1
            out.extend((a, c) for a in sorted(self.attachment))
        return out

    @property
    def edge_count(self) -> int:
        q = self.clique_order
        return q * (q - 1) // 2 + self.star_size

    def describe(self) -> str:
        if self.is_complete:
            return f"K{self.n}"
        att = ",".join(str(a) for a in sorted(self.attachment))
        return f"K{self.clique_order}+{self.star_size}:{att}"

    @staticmethod
    def parse(text: str) -> "HostGraph":
        text = text.strip()
        if not text.startswith("K"):
            raise ValueError(f"bad host spec {text!r}")
        if "+" not in text:
            return HostGraph.complete(int(text[1:]))
        head, tail = text.split("+", 1)
        if ":" not in tail:
            raise ValueError(f"bad star-extension spec {text!r}")
        s_str, att_str = tail.split(":", 1)
        att = [int(a) for a in att_str.split(",") if a != ""]
        return HostGraph.star_extension(int(head[1:]), int(s_str), att)


# ---------------------------------------------------------------------------
# edge colorings
# ---------------------------------------------------------------------------

class EdgeColoring:
    """Immutable assignment of a color from [k] to every host edge."""

    __slots__ = ("host", "k", "colors", "_rows")

    def __init__(self, host: HostGraph, k: int, colors):
        colors = tuple(colors)
        if k < 1:
            raise ColorOutOfRange(f"palette size must be positive, got {k}")
        if k > 255:
            raise BadParameter("palettes beyond 255 colors are unsupported")
        edges = host.edges()
        if len(colors) != len(edges):
            raise BadParameter(
                f"expected {len(edges)} edge colors, got {len(colors)}")
        rows = [bytearray(host.n) for _ in range(host.n)]
        for (u, v), c in zip(edges, colors):
            if not 1 <= c <= k:
                raise ColorOutOfRange(f"color {c} outside 1..{k}")
            rows[u][v] = rows[v][u] = c
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "_rows", tuple(bytes(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("EdgeColoring is immutable")

    def __eq__(self, other):
        return (isinstance(other, EdgeColoring) and self.host == other.host
                and self.k == other.k and self.colors == other.colors)

    def __hash__(self):
        return hash((self.host, self.k, self.colors))

    def __repr__(self):
        return f"EdgeColoring({self.host.describe()}, k={self.k})"

    def color(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.host.n and 0 <= v < self.host.n):
            raise EdgeNotInHost(f"({u}, {v}) is not a host edge")
        c = self._rows[u][v]
        if c == 0:
            raise EdgeNotInHost(f"({u}, {v}) is not a host edge")
        return c

    def color_or_zero(self, u: int, v: int) -> int:
        return self._rows[u][v]

    def edge_items(self):
        return list(zip(self.host.edges(), self.colors))

    @property
    def used_colors(self) -> frozenset:
        return frozenset(self.colors)

    def class_masks(self, c: int) -> list[int]:
        """Per-vertex bitmask of color-c neighbors."""
        n = self.host.n
        masks = [0] * n
        for (u, v), col in zip(self.host.edges(), self.colors):
            if col == c:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return masks

    def all_masks(self) -> list[list[int]]:
        """class_masks for every color, indexed by color - 1."""
        n = self.host.n
        masks = [[0] * n for _ in range(self.k)]
        for (u, v), col in zip(self.host.edges(), self.colors):
            row = masks[col - 1]
            row[u] |= 1 << v
            row[v] |= 1 << u
        return masks

    def relabeled(self, perm) -> "EdgeColoring":
        """Apply a vertex permutation (perm[old] = new); complete hosts only."""
        if not self.host.is_complete:
            raise BadParameter("relabeling is defined for complete hosts")
        n = self.host.n
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        cols = [self._rows[inv[u]][inv[v]] for v in range(1, n)
                for u in range(v)]
        return EdgeColoring(self.host, self.k, cols)

    def recolored(self, cmap, new_k=None) -> "EdgeColoring":
        """Apply a color map given as a dict or a 1-based sequence."""
        if isinstance(cmap, dict):
            lookup = cmap.get
        else:
            table = dict(enumerate(cmap, start=1))
            lookup = table.get
        cols = []
        for c in self.colors:
            nc = lookup(c)
            if nc is None:
                raise ColorOutOfRange(f"color {c} missing from the map")
            cols.append(nc)
        k = new_k if new_k is not None else max(max(cols), self.k)
        return EdgeColoring(self.host, k, cols)

    def to_text(self) -> str:
        lines = [f"{self.host.describe()} {self.k}"]
        lines.extend(f"{u} {v} {c}" for (u, v), c in self.edge_items())
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "EdgeColoring":
        lines = [ln for ln in text.splitlines()
                 if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty coloring file")
        head = lines[0].split()
        if len(head) != 2:
            raise ValueError(f"bad header line {lines[0]!r}")
        host = HostGraph.parse(head[0])
        k = int(head[1])
        assignments = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise ValueError(f"bad edge line {ln!r}")
            assignments.append((int(parts[0]), int(parts[1]), int(parts[2])))
        return make_coloring(host, k, assignments)


def make_coloring(host: HostGraph, k: int, assignments) -> EdgeColoring:
    """Build a coloring from (u, v, color) triples covering every host edge."""
    edges = host.edges()
    index = {e: i for i, e in enumerate(edges)}
    cols = [0] * len(edges)
    for u, v, c in assignments:
        e = (u, v) if u < v else (v, u)
        if e not in index:
            raise EdgeNotInHost(f"({u}, {v}) is not an edge of the host")
        if not 1 <= c <= k:
            raise ColorOutOfRange(f"color {c} outside 1..{k} on edge {e}")
        i = index[e]
        if cols[i]:
            raise DuplicateEdge(f"edge {e} colored twice")
        cols[i] = c
    for e, i in index.items():
        if cols[i] == 0:
            raise MissingEdge(f"edge {e} was never colored")
    return EdgeColoring(host, k, cols)


# ---------------------------------------------------------------------------
# target graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TargetGraph:
    """A small simple graph searched for monochromatically."""

    n: int
    edges: frozenset
    label: str = ""

    @staticmethod
    def of(n: int, edges, label: str = "") -> "TargetGraph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise BadParameter("loops are not allowed in targets")
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameter(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        return TargetGraph(n, frozenset(norm), label)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency()]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str, label: str = "") -> "TargetGraph":
        lines = [ln for ln in text.splitlines()
                 if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty target file")
        n, m = (int(x) for x in lines[0].split())
        edges = []
        for ln in lines[1:m + 1]:
            u, v = (int(x) for x in ln.split())
            edges.append((u, v))
        if len(edges) != m:
            raise ValueError("edge count does not match header")
        return TargetGraph.of(n, edges, label)

    def __repr__(self):
        return self.label or f"TargetGraph(n={self.n}, m={len(self.edges)})"


def clique_graph(p: int) -> TargetGraph:
    if p < 1:
        raise BadParameter("clique order must be positive")
    return TargetGraph.of(p, [(i, j) for i in range(p) for j in range(i + 1, p)],
                          f"K{p}")


def path_graph(t: int) -> TargetGraph:
    if t < 2:
        raise BadParameter("paths need at least two vertices")
    return TargetGraph.of(t, [(i, i + 1) for i in range(t - 1)], f"P{t}")


def cycle_graph(t: int) -> TargetGraph:
    if t < 3:
        raise BadParameter("cycles need at least three vertices")
    edges = [(i, i + 1) for i in range(t - 1)] + [(0, t - 1)]
    return TargetGraph.of(t, edges, f"C{t}")


def star_graph(m: int) -> TargetGraph:
    if m < 1:
        raise BadParameter("stars need at least one leaf")
    return TargetGraph.of(m + 1, [(0, i) for i in range(1, m + 1)], f"K1_{m}")


def target_from_name(name: str) -> TargetGraph:
    """Builtin target names: K<p>, P<t>, C<t>, K1_<m> (or K1,<m>)."""
    name = name.strip()
    if name.upper().startswith("K1_") or name.upper().startswith("K1,"):
        return star_graph(int(name[3:]))
    head = name[0].upper()
    try:
        num = int(name[1:])
    except ValueError:
        raise BadParameter(f"unknown target name {name!r}") from None
    if head == "K":
        return clique_graph(num)
    if head == "P":
        return path_graph(num)
    if head == "C":
        return cycle_graph(num)
    raise BadParameter(f"unknown target name {name!r}")


# ---------------------------------------------------------------------------
# target classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TargetProfile:
    bipartite: bool
    s_H: int | None
    l_H: int | None
    chi: int
    family: str
    family_param: int | None
    is_star: bool
    connected: bool


def _components(n: int, adj) -> list[int]:
    """Connected components as bitmasks, ordered by least vertex."""
    seen = 0
    comps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        stack = [s]
        while stack:
            x = stack.pop()
            rest = adj[x] & ~comp
            while rest:
                b = rest & -rest
                rest ^= b
                comp |= b
                stack.append(b.bit_length() - 1)
            rest = adj[x] & ~comp
        seen |= comp
        comps.append(comp)
    return comps


def _two_color_parts(n: int, adj, comp: int):
    """(side0, side1) masks of a bipartition of the component, or None."""
    side = {}
    start = _lsb(comp)
    side[start] = 0
    stack = [start]
    while stack:
        x = stack.pop()
        m = adj[x]
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            if w in side:
                if side[w] == side[x]:
                    return None
            else:
                side[w] = 1 - side[x]
                stack.append(w)
    m0 = m1 = 0
    for v, s in side.items():
        if s == 0:
            m0 |= 1 << v
        else:
            m1 |= 1 << v
    return m0, m1


def _chromatic_number(n: int, adj) -> int:
    if all(a == 0 for a in adj):
        return 1 if n else 0
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    def colorable(limit: int) -> bool:
        colors = [0] * n

        def rec(i: int, used_max: int) -> bool:
            if i == n:
                return True
            v = order[i]
            cap = min(limit, used_max + 1)
            for c in range(1, cap + 1):
                m = adj[v]
                clash = False
                while m:
                    b = m & -m
                    m ^= b
                    if colors[b.bit_length() - 1] == c:
                        clash = True
                        break
                if not clash:
                    colors[v] = c
                    if rec(i + 1, max(used_max, c)):
                        return True
                    colors[v] = 0
            return False

        return rec(0, 0)

    for limit in range(2, n + 1):
        if colorable(limit):
            return limit
    return n


def classify_target(H: TargetGraph, require_bipartition: bool = False
                    ) -> TargetProfile:
    """Exact bipartition sizes, chromatic number and family tag for a target."""
    n = H.n
    adj = H.adjacency()
    degs = [a.bit_count() for a in adj]
    comps = _components(n, adj)
    connected = len(comps) == 1
    parts = []
    bipartite = True
    for comp in comps:
        p = _two_color_parts(n, adj, comp)
        if p is None:
            bipartite = False
            break
        parts.append(p)
    s_h = l_h = None
    if bipartite and connected and H.edges:
        a, b = parts[0]
        ca, cb = a.bit_count(), b.bit_count()
        s_h, l_h = min(ca, cb), max(ca, cb)
    elif bipartite and require_bipartition:
        raise Disconnected("bipartition sizes need a connected graph")
    if not H.edges:
        chi = 1 if n else 0
    elif bipartite:
        chi = 2
    else:
        chi = _chromatic_number(n, adj)
    m = len(H.edges)
    is_star = n >= 2 and m == n - 1 and max(degs) == n - 1
    if connected and m == n * (n - 1) // 2 and n >= 2:
        family, param = "clique", n
    elif connected and m == n and all(d == 2 for d in degs):
        family, param = "cycle", n
    elif connected and is_star:
        family, param = "star", n - 1
    elif connected and m == n - 1 and max(degs) <= 2:
        family, param = "path", n
    elif bipartite:
        family, param = "general_bipartite", None
    else:
        family, param = "general_nonbipartite", None
    return TargetProfile(bipartite, s_h, l_h, chi, family, param, is_star,
                         connected)


# ---------------------------------------------------------------------------
# embeddings and detectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """Host images of target vertices, plus the colors that witnessed the hit.

    For monochromatic hits ``vertices[i]`` is the image of target vertex i and
    ``colors`` is a single color.  For rainbow triangles ``vertices`` is the
    vertex triple and ``colors`` its three pairwise distinct edge colors.
    """

    vertices: tuple
    colors: tuple


def verify_embedding(G: EdgeColoring, H: TargetGraph, emb: Embedding) -> bool:
    if len(emb.vertices) != H.n or len(set(emb.vertices)) != H.n:
        return False
    c = emb.colors[0]
    return all(G.color_or_zero(emb.vertices[u], emb.vertices[v]) == c
               for u, v in H.edges)


def find_rainbow_triangle(G: EdgeColoring):
    """First vertex triple (lexicographic) whose edges carry three colors."""
    n = G.host.n
    masks = G.all_masks()
    colored = [0] * n
    for row in masks:
        for v in range(n):
            colored[v] |= row[v]
    rows = G._rows
    for u in range(n):
        mu = colored[u]
        if mu == 0:
            continue
        for v in range(u + 1, n):
            c1 = rows[u][v]
            if c1 == 0:
                continue
            same = 0
            for row in masks:
                same |= row[u] & row[v]
            cand = (mu & colored[v] & ~masks[c1 - 1][u] & ~masks[c1 - 1][v]
                    & ~same) >> (v + 1)
            if cand:
                w = v + 1 + _lsb(cand)
                return Embedding((u, v, w), (rows[u][v], rows[u][w],
                                             rows[v][w]))
    return None


def _embed_clique(masks, p: int, n: int):
    if p == 1:
        return (0,) if n >= 1 else None
    universe = (1 << n) - 1

    def rec(cand, chosen):
        if len(chosen) == p:
            return tuple(chosen)
        m = cand
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            sub = cand & masks[w] & ~((b << 1) - 1)
            if sub.bit_count() >= p - len(chosen) - 1:
                r = rec(sub, chosen + [w])
                if r is not None:
                    return r
        return None

    return rec(universe, [])


def _embed_star(masks, m: int, n: int):
    for center in range(n):
        mask = masks[center]
        if mask.bit_count() >= m:
            leaves = []
            while len(leaves) < m:
                b = mask & -mask
                mask ^= b
                leaves.append(b.bit_length() - 1)
            return (center, *leaves)
    return None


def _embed_c4(masks, n: int):
    for u in range(n):
        for v in range(u + 1, n):
            common = masks[u] & masks[v]
            if common.bit_count() >= 2:
                x = _lsb(common)
                common ^= 1 << x
                y = _lsb(common)
                return (u, x, v, y)
    return None


def _embed_path(masks, t: int, n: int):
    def rec(x, used, acc):
        if len(acc) == t:
            return tuple(acc)
        m = masks[x] & ~used
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            r = rec(w, used | b, acc + [w])
            if r is not None:
                return r
        return None

    for s in range(n):
        r = rec(s, 1 << s, [s])
        if r is not None:
            return r
    return None


def _bfs_order(tn: int, tadj, anchors=()):
    """Placement order covering all target vertices, each entry (tv, prevs)."""
    placed = list(anchors)
    placed_set = set(anchors)
    order = []
    while len(placed_set) < tn:
        nxt = None
        for v in range(tn):
            if v in placed_set:
                continue
            if any((tadj[v] >> p) & 1 for p in placed):
                nxt = v
                break
        if nxt is None:  # new component: take the least unplaced vertex
            nxt = min(v for v in range(tn) if v not in placed_set)
        prevs = tuple(p for p in placed if (tadj[nxt] >> p) & 1)
        order.append((nxt, prevs))
        placed.append(nxt)
        placed_set.add(nxt)
    return tuple(order)


def _embed_general(G: EdgeColoring, masks, H: TargetGraph,
                   profile: TargetProfile):
    n = G.host.n
    tn = H.n
    tadj = H.adjacency()
    tdeg = [a.bit_count() for a in tadj]
    hostdeg = [m.bit_count() for m in masks]
    order = _bfs_order(tn, tadj)

    def rec(idx, assign, used, universe):
        if idx == len(order):
            return tuple(assign[v] for v in range(tn))
        tv, prevs = order[idx]
        if prevs:
            cand = masks[assign[prevs[0]]]
            for p in prevs[1:]:
                cand &= masks[assign[p]]
            cand &= ~used
        else:
            cand = universe & ~used
        m = cand
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            if hostdeg[w] < tdeg[tv]:
                continue
            assign[tv] = w
            r = rec(idx + 1, assign, used | b, universe)
            if r is not None:
                return r
            del assign[tv]
        return None

    support = 0
    for v in range(n):
        if masks[v]:
            support |= 1 << v
    if profile.connected:
        comps = _components(n, masks)
        start, prevs0 = order[0]
        for comp in comps:
            if comp.bit_count() < tn:
                continue
            comp_edges = sum((masks[v] & comp).bit_count()
                             for v in range(n) if (comp >> v) & 1) // 2
            if comp_edges < len(H.edges):
                continue
            if not profile.bipartite and _two_color_parts(n, masks, comp):
                continue  # non-bipartite target cannot embed here
            m = comp
            while m:
                b = m & -m
                m ^= b
                w = b.bit_length() - 1
                if hostdeg[w] < tdeg[start]:
                    continue
                r = rec(1, {start: w}, b, comp)
                if r is not None:
                    return r
        return None
    # disconnected target: search over the whole class support
    start, _ = order[0]
    m = support
    while m:
        b = m & -m
        m ^= b
        w = b.bit_length() - 1
        if hostdeg[w] < tdeg[start]:
            continue
        r = rec(1, {start: w}, b, support)
        if r is not None:
            return r
    return None


def find_monochromatic(G: EdgeColoring, H: TargetGraph, c: int,
                       method: str = "auto"):
    """Embedding of H into the color-c class of G (subgraph containment).

    ``method`` is "auto" (family dispatch), "specialized" or "general"; the
    two concrete routes always agree on presence.
    """
    if not 1 <= c <= G.k:
        raise ColorOutOfRange(f"color {c} outside 1..{G.k}")
    if H.n == 0 or min(H.degrees()) == 0:
        raise BadParameter("targets must have no isolated vertex")
    profile = classify_target(H)
    masks = G.class_masks(c)
    n = G.host.n
    verts = None
    route = method
    if method == "auto":
        route = ("specialized"
                 if profile.family in ("clique", "star", "path")
                 or (profile.family == "cycle" and profile.family_param == 4)
                 else "general")
    if route == "specialized":
        if profile.family == "clique":
            verts = _embed_clique(masks, profile.family_param, n)
        elif profile.family == "star":
            verts = _embed_star(masks, profile.family_param, n)
        elif profile.family == "path":
            verts = _embed_path(masks, profile.family_param, n)
        elif profile.family == "cycle" and profile.family_param == 4:
            verts = _embed_c4(masks, n)
        else:
            route = "general"
    if route == "general":
        verts = _embed_general(G, masks, H, profile)
    if verts is None:
        return None
    emb = Embedding(tuple(verts), (c,))
    assert verify_embedding(G, H, emb)
    return emb


def contains_monochromatic(G: EdgeColoring, H: TargetGraph, c: int) -> bool:
    return find_monochromatic(G, H, c) is not None


# ---------------------------------------------------------------------------
# canonical keys
# ---------------------------------------------------------------------------

def canonical_key(G: EdgeColoring, bound: int = CANONICAL_BOUND) -> bytes:
    """Canonical byte string under vertex and color permutations.

    Exact: two complete-host colorings share a key iff they are isomorphic.
    """
    if not G.host.is_complete:
        raise BadParameter("canonical keys are defined for complete hosts")
    if G.host.n > bound:
        raise TooLarge(f"canonical form bounded at {bound} vertices")
    return _kernels.canonical_coloring(G.host.n, G.colors)


def graphs_isomorphic(A: TargetGraph, B: TargetGraph) -> bool:
    """Exact isomorphism test for small plain graphs (backtracking)."""
    if A.n != B.n or len(A.edges) != len(B.edges):
        return False
    n = A.n
    adj_a = A.adjacency()
    adj_b = B.adjacency()
    deg_a = [a.bit_count() for a in adj_a]
    deg_b = [b.bit_count() for b in adj_b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    order = [v for v, _ in _bfs_order(n, adj_a)] if n else []
    image = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        a = order[i]
        for w in range(n):
            if used[w] or deg_b[w] != deg_a[a]:
                continue
            ok = True
            for j in range(i):
                a2 = order[j]
                if ((adj_a[a] >> a2) & 1) != ((adj_b[w] >> image[a2]) & 1):
                    ok = False
                    break
            if ok:
                image[a] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
                image[a] = -1
        return False

    return rec(0)
