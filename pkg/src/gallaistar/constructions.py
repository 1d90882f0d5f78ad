"""Builders for the explicit extremal colorings and their star extensions.

Every builder re-checks its output with the detectors and the exact vertex
count of its defining formula before emitting a certificate; a failure raises
``VerdictFailure`` and indicates a bug, not bad input.

Vertex labels follow the 1-based v1, v2, ... convention of the constructions
in certificates; storage is 0-based (v_i sits at index i - 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import (
    EdgeColoring,
    HostGraph,
    TargetGraph,
    classify_target,
    clique_graph,
    cycle_graph,
    find_monochromatic,
    find_rainbow_triangle,
    path_graph,
    star_graph,
)
from .errors import (
    BadCritical,
    BadInnerRule,
    BadInnerSpec,
    BadParameter,
    ColorRangeMismatch,
    NotBipartite,
    NotNonBipartite,
    VerdictFailure,
)

PENTAGON = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))
PENTAGRAM = ((1, 4), (4, 2), (2, 5), (5, 3), (3, 1))


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass
class Certificate:
    """A built coloring plus recomputed verdicts and count checks."""

    construction: str
    params: dict
    coloring: EdgeColoring
    targets: tuple
    rainbow_free: bool
    target_free: tuple  # per color, index c - 1
    expected_vertices: int
    actual_vertices: int
    expected_star: int | None = None
    actual_star: int | None = None
    notes: tuple = ()
    manifest: dict | None = None

    @property
    def passed(self) -> bool:
        return (self.rainbow_free and all(self.target_free)
                and self.expected_vertices == self.actual_vertices
                and self.expected_star == self.actual_star)

    def to_dict(self) -> dict:
        d = {
            "construction": self.construction,
            "params": dict(self.params),
            "host": self.coloring.host.describe(),
            "k": self.coloring.k,
            "edges": [[u, v, c] for (u, v), c in self.coloring.edge_items()],
            "targets": [[t.label or t.to_text() for t in per]
                        for per in self.targets],
            "verdicts": {
                "rainbow_free": self.rainbow_free,
                "target_free": list(self.target_free),
            },
            "counts": {
                "expected_vertices": self.expected_vertices,
                "actual_vertices": self.actual_vertices,
                "expected_star": self.expected_star,
                "actual_star": self.actual_star,
            },
            "notes": list(self.notes),
        }
        if self.manifest is not None:
            d["manifest"] = self.manifest
        return d

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def coloring_from_certificate(data: dict) -> EdgeColoring:
    """Rebuild the coloring stored in a certificate dictionary."""
    host = HostGraph.parse(data["host"])
    from .core import make_coloring

    return make_coloring(host, data["k"],
                         [(u, v, c) for u, v, c in data["edges"]])


def _certify(name: str, params: dict, coloring: EdgeColoring, targets,
             expected_vertices: int, expected_star=None, notes=()):
    """Recompute all verdicts; emit the certificate only if everything passes."""
    if isinstance(targets, TargetGraph):
        per_color = tuple((targets,) for _ in range(coloring.k))
    else:
        per_color = tuple(tuple(t) if not isinstance(t, TargetGraph) else (t,)
                          for t in targets)
        if len(per_color) != coloring.k:
            raise BadParameter("need one target list per color")
    rainbow_free = find_rainbow_triangle(coloring) is None
    target_free = tuple(
        all(find_monochromatic(coloring, H, c) is None for H in per_color[c - 1])
        for c in range(1, coloring.k + 1))
    actual_star = (None if coloring.host.is_complete
                   else coloring.host.star_size)
    cert = Certificate(name, params, coloring, per_color, rainbow_free,
                       target_free, expected_vertices, coloring.host.n
                       if coloring.host.is_complete else coloring.host.n - 1,
                       expected_star, actual_star, tuple(notes))
    if not cert.passed:
        raise VerdictFailure(
            f"{name}{params}: rainbow_free={rainbow_free}, "
            f"target_free={target_free}, vertices "
            f"{cert.actual_vertices}/{expected_vertices}, "
            f"star {actual_star}/{expected_star}")
    return cert


def coloring_to_dot(coloring: EdgeColoring, name: str = "coloring") -> str:
    """DOT text with edges colored by palette index."""
    palette = ["black", "red", "blue", "forestgreen", "orange", "purple",
               "brown", "cyan3", "magenta", "gold3", "gray40"]
    lines = [f"graph {name} {{"]
    for (u, v), c in coloring.edge_items():
        col = palette[c % len(palette)]
        lines.append(f'  {u} -- {v} [color="{col}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# two-color critical inputs
# ---------------------------------------------------------------------------

class TwoColorCritical:
    """A coloring on at most two colors verified to avoid its targets."""

    def __init__(self, coloring: EdgeColoring, targets):
        targets = (targets,) if isinstance(targets, TargetGraph) else tuple(targets)
        used = sorted(coloring.used_colors)
        if len(used) > 2:
            raise BadCritical(f"{len(used)} colors used, expected at most 2")
        for c in range(1, coloring.k + 1):
            for H in targets:
                hit = find_monochromatic(coloring, H, c)
                if hit is not None:
                    raise BadCritical(
                        f"target {H!r} found in color {c} at {hit.vertices}")
        self.coloring = coloring
        self.targets = targets
        self.palette = tuple(used)

    @property
    def order(self) -> int:
        """Clique order of the underlying host."""
        return self.coloring.host.clique_order

    @property
    def star_size(self) -> int:
        return self.coloring.host.star_size

    def relabeled_colors(self, pair, k: int) -> EdgeColoring:
        """Map the (sorted) palette onto ``pair`` inside a k-color palette."""
        used = sorted(self.coloring.used_colors)
        cmap = {c: pair[i] for i, c in enumerate(used)}
        return self.coloring.recolored(cmap, new_k=k)


# ---------------------------------------------------------------------------
# generic operations
# ---------------------------------------------------------------------------

def clone_extension(G: EdgeColoring, u: int) -> EdgeColoring:
    """Add a center joined to every vertex except u, copying u's edge colors."""
    if not G.host.is_complete:
        raise BadParameter("clone extension starts from a complete host")
    n1 = G.host.n
    if not 0 <= u < n1:
        raise BadParameter(f"vertex {u} outside the host")
    att = sorted(w for w in range(n1) if w != u)
    host = HostGraph.star_extension(n1, n1 - 1, att)
    colors = list(G.colors) + [G.color(u, w) for w in att]
    return EdgeColoring(host, G.k, colors)


def blow_up(outer: EdgeColoring, inners, k: int | None = None) -> EdgeColoring:
    """Substitute the i-th inner coloring for vertex i of the outer coloring."""
    if not outer.host.is_complete:
        raise BadParameter("blow-up outer must be a complete host")
    inners = list(inners)
    if len(inners) != outer.host.n:
        raise BadParameter("need one inner coloring per outer vertex")
    for inner in inners:
        if not inner.host.is_complete:
            raise BadParameter("blow-up inners must be complete hosts")
    sizes = [inner.host.n for inner in inners]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    n = sum(sizes)
    used = set(outer.used_colors)
    for inner in inners:
        used |= set(inner.used_colors)
    k_res = k if k is not None else max(outer.k, *(i.k for i in inners))
    if used and max(used) > k_res:
        raise ColorRangeMismatch(
            f"colors up to {max(used)} do not fit in [{k_res}]")
    mat = [[0] * n for _ in range(n)]
    for bi, inner in enumerate(inners):
        base = offsets[bi]
        for (u, v), c in inner.edge_items():
            mat[base + u][base + v] = mat[base + v][base + u] = c
    for (i, j), c in outer.edge_items():
        for u in range(offsets[i], offsets[i] + sizes[i]):
            for v in range(offsets[j], offsets[j] + sizes[j]):
                mat[u][v] = mat[v][u] = c
    cols = [mat[u][v] for v in range(1, n) for u in range(v)]
    return EdgeColoring(HostGraph.complete(n), k_res, cols)


def _single_vertex(k: int) -> EdgeColoring:
    return EdgeColoring(HostGraph.complete(1), k, [])


def _mono_clique(n: int, color: int, k: int) -> EdgeColoring:
    host = HostGraph.complete(n)
    return EdgeColoring(host, k, [color] * host.edge_count)


# ---------------------------------------------------------------------------
# four-cycle family
# ---------------------------------------------------------------------------

def _c4_core_matrix(n: int, k: int):
    """Two edge-disjoint five-cycles on v1..v5, later vertices in one color each."""
    mat = [[0] * n for _ in range(n)]
    for a, b in PENTAGON:
        mat[a - 1][b - 1] = mat[b - 1][a - 1] = 1
    for a, b in PENTAGRAM:
        mat[a - 1][b - 1] = mat[b - 1][a - 1] = 2
    for j in range(6, n + 1):  # paper index of the appended vertex
        for i in range(1, j):
            mat[j - 1][i - 1] = mat[i - 1][j - 1] = j - 3
    return mat


def build_c4_critical(k: int) -> Certificate:
    """k-coloring of K_{k+3} with no rainbow triangle and no one-colored C4."""
    if k < 2:
        raise BadParameter("needs k >= 2")
    n1 = k + 3
    mat = _c4_core_matrix(n1, k)
    host = HostGraph.complete(n1)
    cols = [mat[u][v] for (u, v) in host.edges()]
    coloring = EdgeColoring(host, k, cols)
    return _certify("c4", {"k": k}, coloring, cycle_graph(4), k + 3)


def extend_c4_lower(k: int) -> Certificate:
    """Star extension of the C4-critical coloring witnessing star size k+2."""
    if k < 2:
        raise BadParameter("needs k >= 2")
    n1 = k + 3
    mat = _c4_core_matrix(n1, k)
    att = [i - 1 for i in range(1, n1 + 1) if i != 5]
    host = HostGraph.star_extension(n1, n1 - 1, att)
    star_colors = {1: 2, 2: 1, 3: 1, 4: 2}  # paper vertices v1..v4
    cols = [mat[u][v] for (u, v) in host.edges()[:n1 * (n1 - 1) // 2]]
    for a in sorted(att):
        i = a + 1
        cols.append(star_colors[i] if i <= 4 else i - 3)
    coloring = EdgeColoring(host, k, cols)
    return _certify("c4-ext", {"k": k}, coloring, cycle_graph(4), k + 3,
                    expected_star=k + 2)


# ---------------------------------------------------------------------------
# four-path family
# ---------------------------------------------------------------------------

def default_p4_inner_rule(i: int, j: int) -> int:
    return j - 2


def _p4_matrix(k: int, inner_rule):
    n1 = k + 2
    mat = [[0] * n1 for _ in range(n1)]
    for a in range(3):
        for b in range(a + 1, 3):
            mat[a][b] = mat[b][a] = 1
    for i in range(4, n1 + 1):
        for t in range(3):
            mat[i - 1][t] = mat[t][i - 1] = i - 2
    for i in range(4, n1 + 1):
        for j in range(i + 1, n1 + 1):
            c = inner_rule(i, j)
            if c not in (i - 2, j - 2):
                raise BadInnerRule(
                    f"edge v{i}v{j} must get color {i - 2} or {j - 2}, got {c}")
            mat[i - 1][j - 1] = mat[j - 1][i - 1] = c
    # the rule must not introduce a rainbow triangle among v4..v_{n-1}
    for a in range(3, n1):
        for b in range(a + 1, n1):
            for c in range(b + 1, n1):
                cols = {mat[a][b], mat[a][c], mat[b][c]}
                if len(cols) == 3:
                    raise BadInnerRule(
                        f"rainbow triangle v{a + 1}v{b + 1}v{c + 1} "
                        "among the appended vertices")
    return mat


def build_p4_critical(k: int, inner_rule=None) -> Certificate:
    """k-coloring of K_{k+2}: one triangle plus one-colored pendant classes."""
    if k < 1:
        raise BadParameter("needs k >= 1")
    mat = _p4_matrix(k, inner_rule or default_p4_inner_rule)
    host = HostGraph.complete(k + 2)
    coloring = EdgeColoring(host, k, [mat[u][v] for (u, v) in host.edges()])
    return _certify("p4", {"k": k}, coloring, path_graph(4), k + 2)


def extend_p4_lower(k: int) -> Certificate:
    """Star extension over the default rule, center joined to v4..v_{n-1}."""
    if k < 2:
        raise BadParameter("needs k >= 2")
    n1 = k + 2
    mat = _p4_matrix(k, default_p4_inner_rule)
    att = list(range(3, n1))
    host = HostGraph.star_extension(n1, k - 1, att)
    cols = [mat[u][v] for (u, v) in host.edges()[:n1 * (n1 - 1) // 2]]
    cols.extend(mat[0][a] for a in sorted(att))  # copy f(v1 v_i)
    coloring = EdgeColoring(host, k, cols)
    return _certify("p4-ext", {"k": k}, coloring, path_graph(4), k + 2,
                    expected_star=k - 1)


# ---------------------------------------------------------------------------
# star family
# ---------------------------------------------------------------------------

def _star_part_sizes(m: int):
    if m % 2 == 1:
        return [(m - 1) // 2] * 5
    return [m // 2] + [(m - 2) // 2] * 4


def _validate_star_inner(part_no: int, part: EdgeColoring, m: int, k: int):
    """Palette and matching conditions for the inner coloring of part H_i."""
    if m % 2 == 1:
        banned = {1, 2}
        matching_colors = set()
    elif part_no == 1:
        banned = set()
        matching_colors = {1, 2}
    elif part_no in (2, 5):
        banned = {1}
        matching_colors = {2}
    else:  # parts 3 and 4
        banned = {2}
        matching_colors = {1}
    touched = set()
    for (u, v), c in part.edge_items():
        if c in banned:
            raise BadInnerSpec(
                f"color {c} is not allowed inside part H{part_no}")
        if c in matching_colors:
            if u in touched or v in touched:
                raise BadInnerSpec(
                    f"low-color edges inside H{part_no} must form a matching")
            touched.add(u)
            touched.add(v)
    if find_rainbow_triangle(part) is not None:
        raise BadInnerSpec(f"rainbow triangle inside part H{part_no}")


def build_star_critical(m: int, k: int, inner_spec=None) -> Certificate:
    """Five-part blow-up of the two five-cycles, avoiding one-colored K_{1,m}.

    ``inner_spec`` optionally maps the 1-based part number to a list of
    (local_u, local_v, color) triples for that part's clique; by default every
    part is colored 3 throughout.
    """
    if m < 3 or k < 3:
        raise BadParameter("needs m >= 3 and k >= 3")
    if m % 2 == 0 and m < 4:
        raise BadParameter("even m needs m >= 4")
    sizes = _star_part_sizes(m)
    from .core import make_coloring

    parts = []
    for pi, size in enumerate(sizes, start=1):
        host = HostGraph.complete(size)
        if inner_spec and pi in inner_spec:
            part = make_coloring(host, k, inner_spec[pi])
        else:
            part = EdgeColoring(host, k, [3] * host.edge_count)
        _validate_star_inner(pi, part, m, k)
        parts.append(part)
    outer_host = HostGraph.complete(5)
    outer_mat = [[0] * 5 for _ in range(5)]
    for a, b in PENTAGON:
        outer_mat[a - 1][b - 1] = outer_mat[b - 1][a - 1] = 1
    for a, b in PENTAGRAM:
        outer_mat[a - 1][b - 1] = outer_mat[b - 1][a - 1] = 2
    outer = EdgeColoring(outer_host, k,
                         [outer_mat[u][v] for (u, v) in outer_host.edges()])
    coloring = blow_up(outer, parts, k=k)
    expected = (5 * m - 5) // 2 if m % 2 == 1 else (5 * m - 8) // 2
    notes = ()
    if m % 2 == 0 and m < 12:
        notes = ("family completeness is only characterized for even m >= 12",)
    return _certify("star", {"m": m, "k": k}, coloring, star_graph(m),
                    expected, notes=notes)


def extend_star_lower(m: int, k: int) -> Certificate:
    """Star extension over the default inner coloring.

    Odd m: center joined to V1 and V2 in color 3 (star size m-1).  Even
    m >= 12: center joined to V1, V2, V3, V5 with color 1 toward V1 and V3 and
    color 2 toward V2 and V5 (star size 2m-3).
    """
    if m < 3 or k < 3:
        raise BadParameter("needs m >= 3 and k >= 3")
    if m % 2 == 0 and m < 12:
        raise BadParameter(
            "even m below 12 is open; no extension witness is characterized")
    base = build_star_critical(m, k)
    sizes = _star_part_sizes(m)
    offsets = [sum(sizes[:i]) for i in range(5)]

    def part_range(pi):  # 1-based part number
        return range(offsets[pi - 1], offsets[pi - 1] + sizes[pi - 1])

    n1 = sum(sizes)
    if m % 2 == 1:
        att = sorted(list(part_range(1)) + list(part_range(2)))
        star_color = {a: 3 for a in att}
        expected_star = m - 1
    else:
        att = sorted(list(part_range(1)) + list(part_range(2))
                     + list(part_range(3)) + list(part_range(5)))
        star_color = {}
        for a in part_range(1):
            star_color[a] = 1
        for a in part_range(3):
            star_color[a] = 1
        for a in part_range(2):
            star_color[a] = 2
        for a in part_range(5):
            star_color[a] = 2
        expected_star = 2 * m - 3
    host = HostGraph.star_extension(n1, len(att), att)
    cols = list(base.coloring.colors) + [star_color[a] for a in sorted(att)]
    coloring = EdgeColoring(host, k, cols)
    expected = (5 * m - 5) // 2 if m % 2 == 1 else (5 * m - 8) // 2
    return _certify("star-ext", {"m": m, "k": k}, coloring, star_graph(m),
                    expected, expected_star=expected_star)


# ---------------------------------------------------------------------------
# bipartite lower-bound family
# ---------------------------------------------------------------------------

def _check_h1crit(h1crit: TwoColorCritical, H: TargetGraph):
    if set(h1crit.palette) - {1, 2}:
        raise BadCritical("the two-color input must use colors 1 and 2")
    for c in (1, 2):
        if c <= h1crit.coloring.k and find_monochromatic(
                h1crit.coloring, H, c) is not None:
            raise BadCritical(f"input contains the target in color {c}")


def build_bipartite_lower(k: int, H: TargetGraph,
                          h1crit: TwoColorCritical) -> Certificate:
    """Layered coloring: a two-colored critical core plus one-colored parts."""
    profile = classify_target(H, require_bipartition=True)
    if not profile.bipartite:
        raise NotBipartite(f"{H!r} is not bipartite")
    if k < 2:
        raise BadParameter("needs k >= 2")
    if not h1crit.coloring.host.is_complete:
        raise BadCritical("the core must color a complete graph")
    _check_h1crit(h1crit, H)
    s = profile.s_H
    r2 = h1crit.order + 1
    n1 = (r2 - 1) + (k - 2) * (s - 1)
    mat = [[0] * n1 for _ in range(n1)]
    for (u, v), c in h1crit.coloring.edge_items():
        mat[u][v] = mat[v][u] = c
    base = r2 - 1
    for part in range(2, k):  # paper parts V_2..V_{k-1}, color part+1
        lo = base + (part - 2) * (s - 1)
        hi = lo + (s - 1)
        for u in range(lo, hi):
            for v in range(u + 1, hi):
                mat[u][v] = mat[v][u] = part + 1
            for v in range(lo):
                mat[u][v] = mat[v][u] = part + 1
    host = HostGraph.complete(n1)
    coloring = EdgeColoring(host, k, [mat[u][v] for (u, v) in host.edges()])
    return _certify("bipartite", {"k": k, "target": H.label or "H"},
                    coloring, H, n1)


def extend_bipartite_lower(k: int, H: TargetGraph,
                           h1crit_ext: TwoColorCritical) -> Certificate:
    """Center joined to every later part plus the critical core's star."""
    profile = classify_target(H, require_bipartition=True)
    if not profile.bipartite:
        raise NotBipartite(f"{H!r} is not bipartite")
    if k < 2:
        raise BadParameter("needs k >= 2")
    ext_host = h1crit_ext.coloring.host
    if ext_host.is_complete:
        raise BadCritical("the extension input must be a star extension")
    _check_h1crit(h1crit_ext, H)
    s = profile.s_H
    r2 = ext_host.clique_order + 1
    r_star = ext_host.star_size + 1
    n1 = (r2 - 1) + (k - 2) * (s - 1)
    # core restriction: the clique edges come first in the extension's order
    clique_edges = (r2 - 1) * (r2 - 2) // 2
    core = EdgeColoring(HostGraph.complete(r2 - 1), h1crit_ext.coloring.k,
                        h1crit_ext.coloring.colors[:clique_edges])
    base_cert = build_bipartite_lower(k, H, TwoColorCritical(core, (H,)))
    mat = [[0] * (n1 + 1) for _ in range(n1 + 1)]
    for (u, v), c in base_cert.coloring.edge_items():
        mat[u][v] = mat[v][u] = c
    center = n1
    att = sorted(ext_host.attachment)
    star_cols = h1crit_ext.coloring.colors[clique_edges:]
    for a, c in zip(att, star_cols):
        mat[center][a] = mat[a][center] = c
    base = r2 - 1
    attachment = list(att)
    for part in range(2, k):
        lo = base + (part - 2) * (s - 1)
        for u in range(lo, lo + (s - 1)):
            mat[center][u] = mat[u][center] = part + 1
            attachment.append(u)
    host = HostGraph.star_extension(n1, len(attachment), attachment)
    cols = [mat[u][v] for (u, v) in host.edges()]
    coloring = EdgeColoring(host, k, cols)
    expected_star = (r_star - 1) + (k - 2) * (s - 1)
    return _certify("bipartite-ext", {"k": k, "target": H.label or "H"},
                    coloring, H, n1, expected_star=expected_star)


# ---------------------------------------------------------------------------
# non-bipartite tower family
# ---------------------------------------------------------------------------

@dataclass
class TowerSeeds:
    """Two-color critical inputs feeding the tower constructions."""

    base: TwoColorCritical
    base_extension: TwoColorCritical | None = None
    merge_critical: TwoColorCritical | None = None
    merge_extension: TwoColorCritical | None = None


def _tower_counts(k: int, r2: int, m_h: int | None, chi: int) -> int:
    """Vertex count n_k - 1 of the level-k tower."""
    if k % 2 == 0:
        return (r2 - 1) * (m_h - 1) ** ((k - 2) // 2) if k > 2 else r2 - 1
    return (chi - 1) * (r2 - 1) * (m_h - 1) ** ((k - 3) // 2) if k > 3 \
        else (chi - 1) * (r2 - 1)


def _build_tower_coloring(k: int, seeds: TowerSeeds, chi: int,
                          final_k: int) -> EdgeColoring:
    if k == 2:
        base = seeds.base.relabeled_colors((1, 2), final_k)
        return base
    if k % 2 == 1:
        prev = _build_tower_coloring(k - 1, seeds, chi, final_k)
        outer = _mono_clique(chi - 1, k, final_k)
        return blow_up(outer, [prev] * (chi - 1), k=final_k)
    if seeds.merge_critical is None:
        raise BadCritical("even levels beyond 2 need a merge-critical input")
    prev = _build_tower_coloring(k - 2, seeds, chi, final_k)
    d = seeds.merge_critical.relabeled_colors((k - 1, k), final_k)
    return blow_up(d, [prev] * d.host.n, k=final_k)


def build_nonbipartite_lower(k: int, H: TargetGraph,
                             seeds: TowerSeeds) -> Certificate:
    """Tower of blow-ups: critical base, merge-critical even steps, one
    extra mono-colored clique layer at an odd top."""
    profile = classify_target(H)
    if profile.bipartite:
        raise NotNonBipartite(f"{H!r} is bipartite")
    if k < 2:
        raise BadParameter("needs k >= 2")
    if not seeds.base.coloring.host.is_complete:
        raise BadCritical("the base must color a complete graph")
    chi = profile.chi
    r2 = seeds.base.order + 1
    m_h = seeds.merge_critical.order + 1 if seeds.merge_critical else None
    if k >= 4 and m_h is None:
        raise BadCritical("levels k >= 4 need a merge-critical input")
    coloring = _build_tower_coloring(k, seeds, chi, k)
    expected = _tower_counts(k, r2, m_h, chi)
    return _certify("tower", {"k": k, "target": H.label or "H"},
                    coloring, H, expected)


def extend_nonbipartite_lower(k: int, H: TargetGraph,
                              seeds: TowerSeeds) -> Certificate:
    """Star extension of the tower with the exact star sizes of the lower
    bound: r2 = r*(H)-1, even levels (r*(merges)-1)(n_{k-2}-1), odd levels
    (chi-2)(n_{k-1}-1)."""
    profile = classify_target(H)
    if profile.bipartite:
        raise NotNonBipartite(f"{H!r} is bipartite")
    if k < 2:
        raise BadParameter("needs k >= 2")
    chi = profile.chi
    r2 = seeds.base.order + 1
    m_h = seeds.merge_critical.order + 1 if seeds.merge_critical else None
    if k == 2:
        ext = seeds.base_extension
        if ext is None or ext.coloring.host.is_complete:
            raise BadCritical("level 2 needs a critical star-extension input")
        coloring = ext.relabeled_colors((1, 2), 2)
        return _certify("tower-ext", {"k": k, "target": H.label or "H"},
                        coloring, H, r2 - 1,
                        expected_star=ext.star_size)
    if k % 2 == 1:
        # top layer: a one-colored clique over copies of the previous level
        prev = _build_tower_coloring(k - 1, seeds, chi, k)
        tower = blow_up(_mono_clique(chi - 1, k, k), [prev] * (chi - 1), k=k)
    else:
        # top layer: rebuilt from the extension witness's clique restriction,
        # so the star colors below match the joins they lean on
        ext = seeds.merge_extension
        if ext is None or ext.coloring.host.is_complete:
            raise BadCritical("even levels need a merge-critical "
                              "star-extension input")
        if ext.coloring.host.clique_order != m_h - 1:
            raise BadCritical("merge extension order does not match the "
                              "merge-critical order")
        relabeled = ext.relabeled_colors((k - 1, k), k)
        clique_edges = (m_h - 1) * (m_h - 2) // 2
        d_top = EdgeColoring(HostGraph.complete(m_h - 1), k,
                             relabeled.colors[:clique_edges])
        prev = _build_tower_coloring(k - 2, seeds, chi, k)
        tower = blow_up(d_top, [prev] * (m_h - 1), k=k)
    n1 = tower.host.n
    center = n1
    mat = [[0] * (n1 + 1) for _ in range(n1 + 1)]
    for (u, v), c in tower.edge_items():
        mat[u][v] = mat[v][u] = c
    attachment = []
    if k % 2 == 1:
        copy_size = _tower_counts(k - 1, r2, m_h, chi)
        for j in range(chi - 2):
            for u in range(j * copy_size, (j + 1) * copy_size):
                mat[center][u] = mat[u][center] = k
                attachment.append(u)
        expected_star = (chi - 2) * copy_size
    else:
        copy_size = _tower_counts(k - 2, r2, m_h, chi)
        att_d = sorted(ext.coloring.host.attachment)
        star_cols = relabeled.colors[clique_edges:]
        for j, c in zip(att_d, star_cols):
            for u in range(j * copy_size, (j + 1) * copy_size):
                mat[center][u] = mat[u][center] = c
                attachment.append(u)
        expected_star = ext.star_size * copy_size
    host = HostGraph.star_extension(n1, len(attachment), sorted(attachment))
    cols = [mat[u][v] for (u, v) in host.edges()]
    coloring = EdgeColoring(host, k, cols)
    return _certify("tower-ext", {"k": k, "target": H.label or "H"},
                    coloring, H, _tower_counts(k, r2, m_h, chi),
                    expected_star=expected_star)


# ---------------------------------------------------------------------------
# explicit two-color seeds for the known small targets
# ---------------------------------------------------------------------------

def pentagon_coloring() -> EdgeColoring:
    """K5 split into two edge-disjoint five-cycles; triangle- and C4-free in
    both colors."""
    host = HostGraph.complete(5)
    mat = [[0] * 5 for _ in range(5)]
    for a, b in PENTAGON:
        mat[a - 1][b - 1] = mat[b - 1][a - 1] = 1
    for a, b in PENTAGRAM:
        mat[a - 1][b - 1] = mat[b - 1][a - 1] = 2
    return EdgeColoring(host, 2, [mat[u][v] for (u, v) in host.edges()])


def p4_critical_core() -> TwoColorCritical:
    """K4 with a color-1 triangle and a color-2 star: no one-colored P4."""
    host = HostGraph.complete(4)
    mat = [[0] * 4 for _ in range(4)]
    for u in range(3):
        for v in range(u + 1, 3):
            mat[u][v] = mat[v][u] = 1
        mat[u][3] = mat[3][u] = 2
    cols = [mat[u][v] for (u, v) in host.edges()]
    return TwoColorCritical(EdgeColoring(host, 2, cols), path_graph(4))


def p4_critical_extension() -> TwoColorCritical:
    """The P4-critical K4 plus a center tied to the star hub in color 1."""
    core = p4_critical_core().coloring
    host = HostGraph.star_extension(4, 1, [3])
    cols = list(core.colors) + [1]
    return TwoColorCritical(EdgeColoring(host, 2, cols), path_graph(4))


def c4_critical_core() -> TwoColorCritical:
    return TwoColorCritical(pentagon_coloring(), cycle_graph(4))


def c4_critical_extension() -> TwoColorCritical:
    return TwoColorCritical(extend_c4_lower(2).coloring, cycle_graph(4))


def triangle_critical_core() -> TwoColorCritical:
    return TwoColorCritical(pentagon_coloring(), clique_graph(3))


def triangle_critical_extension() -> TwoColorCritical:
    return TwoColorCritical(clone_extension(pentagon_coloring(), 0),
                            clique_graph(3))


def split_k8_coloring() -> EdgeColoring:
    """K8: color 1 on two disjoint K4 blocks, color 2 across; C5-free twice."""
    host = HostGraph.complete(8)
    cols = []
    for u, v in host.edges():
        same = (u < 4) == (v < 4)
        cols.append(1 if same else 2)
    return EdgeColoring(host, 2, cols)


def matching_c4_coloring() -> EdgeColoring:
    """K4: a color-1 perfect matching against a color-2 four-cycle."""
    host = HostGraph.complete(4)
    mat = [[0] * 4 for _ in range(4)]
    for u, v in ((0, 1), (2, 3)):
        mat[u][v] = mat[v][u] = 1
    for u, v in ((0, 2), (2, 1), (1, 3), (3, 0)):
        mat[u][v] = mat[v][u] = 2
    return EdgeColoring(host, 2, [mat[u][v] for (u, v) in host.edges()])


def split_k8_bridge_extension() -> EdgeColoring:
    """K8 blocks-plus-bridge coloring with a center on five vertices.

    Color 1 covers the two K4 blocks and one bridge between them; the center
    reaches both bridge ends in color 1 and one block in color 2.  Neither
    color contains a five-cycle.
    """
    host = HostGraph.star_extension(8, 5, [0, 1, 2, 3, 4])
    mat = [[0] * 9 for _ in range(9)]
    for u in range(8):
        for v in range(u + 1, 8):
            same = (u < 4) == (v < 4)
            mat[u][v] = mat[v][u] = 1 if same else 2
    mat[0][4] = mat[4][0] = 1  # the bridge
    for a, c in ((0, 1), (1, 2), (2, 2), (3, 2), (4, 1)):
        mat[8][a] = mat[a][8] = c
    return EdgeColoring(host, 2, [mat[u][v] for (u, v) in host.edges()])


def matching_c4_extension() -> EdgeColoring:
    """The K4 matching-vs-four-cycle coloring plus a three-edge center star
    avoiding every quotient of a five-cycle in both colors."""
    host = HostGraph.star_extension(4, 3, [0, 1, 2])
    core = matching_c4_coloring()
    cols = list(core.colors) + [1, 2, 1]  # center to 0, 1, 2
    return EdgeColoring(host, 2, cols)


def five_cycle_seeds() -> "TowerSeeds":
    """Explicit tower inputs for the five-cycle target."""
    C5 = cycle_graph(5)
    merges = (clique_graph(3),
              TargetGraph.of(4, [(0, 1), (0, 2), (1, 2), (0, 3)], "paw"),
              C5)
    return TowerSeeds(
        base=TwoColorCritical(split_k8_coloring(), C5),
        base_extension=TwoColorCritical(split_k8_bridge_extension(), C5),
        merge_critical=TwoColorCritical(matching_c4_coloring(), merges),
        merge_extension=TwoColorCritical(matching_c4_extension(), merges),
    )


def triangle_seeds() -> "TowerSeeds":
    """Explicit tower inputs for the triangle target."""
    return TowerSeeds(
        base=triangle_critical_core(),
        base_extension=triangle_critical_extension(),
        merge_critical=triangle_critical_core(),
        merge_extension=triangle_critical_extension(),
    )


def bipartite_seeds(H: TargetGraph):
    """Explicit (core, extension) pairs for the two known bipartite targets."""
    from .core import graphs_isomorphic

    if graphs_isomorphic(H, path_graph(4)):
        return p4_critical_core(), p4_critical_extension()
    if graphs_isomorphic(H, cycle_graph(4)):
        return c4_critical_core(), c4_critical_extension()
    raise BadParameter(f"no explicit seeds for {H!r}; derive them by search")
