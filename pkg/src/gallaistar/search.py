"""Pruned exhaustive search over edge colorings.

The central question is ``arrows``: does every k-coloring of the host contain
a rainbow triangle (when forbidden) or a one-colored target in some color?
Ramsey-style numbers are the thresholds where arrows flips to true; witnesses
are the good colorings found one step below.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import _kernels
from .core import (
    EdgeColoring,
    HostGraph,
    TargetGraph,
    canonical_key,
    classify_target,
    find_monochromatic,
    find_rainbow_triangle,
    graphs_isomorphic,
)
from .errors import (
    BadParameter,
    BipartiteInput,
    BudgetExceeded,
    NotFoundWithinBound,
    TooLarge,
)

DEFAULT_NODE_BUDGET = 1_000_000_000
KERNEL_MAX_VERTICES = 64


# ---------------------------------------------------------------------------
# problem and result records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchProblem:
    host: HostGraph
    k: int
    targets: tuple
    forbid_rainbow_triangle: bool

    def __post_init__(self):
        if len(self.targets) != self.k:
            raise BadParameter("need one target per color")


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    seconds: float = 0.0

    def add(self, other: "SearchStats"):
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.seconds += other.seconds


@dataclass
class ArrowsOutcome:
    holds: bool
    counterexample: EdgeColoring | None
    stats: SearchStats
    exact: bool = True


@dataclass
class SearchResult:
    value: int
    witness: EdgeColoring | None
    stats: SearchStats
    exact: bool = True


@dataclass
class MergeFamily:
    base: TargetGraph
    members: tuple
    m_h: int | None = None
    r_star_family: int | None = None
    m_witness: EdgeColoring | None = None
    r_witness: EdgeColoring | None = None


def normalize_targets(k: int, targets) -> tuple:
    """A single target replicates across all k colors."""
    if isinstance(targets, TargetGraph):
        return (targets,) * k
    targets = tuple(targets)
    if len(targets) == 1:
        return targets * k
    if len(targets) != k:
        raise BadParameter(f"expected 1 or {k} targets, got {len(targets)}")
    return targets


# ---------------------------------------------------------------------------
# target compilation for the kernel
# ---------------------------------------------------------------------------

def compile_checker(H: TargetGraph):
    """Kernel checker descriptor for one target graph."""
    if H.n > 16:
        raise TooLarge("kernel targets bounded at 16 vertices")
    profile = classify_target(H)
    fam, p = profile.family, profile.family_param
    if fam == "clique":
        return ("clique", p)
    if fam == "star":
        return ("star", p)
    if fam == "path":
        return ("path", p)
    if fam == "cycle":
        return ("cycle", p)
    tadj = H.adjacency()
    tdeg = tuple(a.bit_count() for a in tadj)
    from .core import _bfs_order

    anchors = []
    for a, b in H.sorted_edges():
        for ta, tb in ((a, b), (b, a)):
            order = _bfs_order(H.n, tadj, anchors=(ta, tb))
            anchors.append((ta, tb, order))
    return ("general", (H.n, tdeg, tuple(anchors)))


def compile_color_checkers(k: int, targets_per_color) -> tuple:
    """Per-color checker tuples, cheapest target first."""
    out = []
    for per in targets_per_color:
        per = (per,) if isinstance(per, TargetGraph) else tuple(per)
        ordered = sorted(per, key=lambda t: (t.n, len(t.edges)))
        out.append(tuple(compile_checker(t) for t in ordered))
    return tuple(out)


# ---------------------------------------------------------------------------
# arrows
# ---------------------------------------------------------------------------

def format_checkpoint(frontier) -> tuple:
    return tuple(",".join(f"{e}:{c}" for e, c in line) for line in frontier)


def parse_checkpoint_line(line: str):
    pairs = [p for p in line.strip().split(",") if p]
    out = []
    for p in pairs:
        e, c = p.split(":")
        out.append((int(e), int(c)))
    return out


def _prefix_to_colors(line) -> list:
    pairs = line if not isinstance(line, str) else parse_checkpoint_line(line)
    cols = []
    for idx, (e, c) in enumerate(pairs):
        if e != idx:
            raise BadParameter("checkpoint prefixes must cover edges in order")
        cols.append(c)
    return cols


def arrows(problem: SearchProblem, node_budget: int = DEFAULT_NODE_BUDGET,
           fixed=None, resume_prefix=None, mode: str = "decide",
           collect_limit: int = 1_000_000):
    """Decide whether every coloring of the host is hit.

    Returns an ArrowsOutcome in decide mode.  ``mode="enumerate"`` collects
    every good coloring instead and returns (list, stats).  Raises
    BudgetExceeded (with partial stats and a resumable checkpoint) when the
    node budget runs out before the question is settled.
    """
    host = problem.host
    if host.n > KERNEL_MAX_VERTICES:
        raise TooLarge(f"search hosts bounded at {KERNEL_MAX_VERTICES}")
    targets_per_color = [per if not isinstance(per, TargetGraph) else (per,)
                         for per in problem.targets]
    checkers = compile_color_checkers(problem.k, targets_per_color)
    identical = all(set(per) == set(targets_per_color[0])
                    for per in targets_per_color)
    symbreak = identical and fixed is None
    edges = host.edges()
    prefix = _prefix_to_colors(resume_prefix) if resume_prefix else None
    kmode = (_kernels.MODE_DECIDE if mode == "decide"
             else _kernels.MODE_ENUMERATE)
    t0 = time.perf_counter()
    res = _kernels.dfs_search(host.n, edges, problem.k, fixed,
                              problem.forbid_rainbow_triangle, symbreak,
                              checkers, kmode, node_budget, collect_limit,
                              prefix)
    stats = SearchStats(res["nodes"], res["prunes"],
                        time.perf_counter() - t0)
    if mode == "enumerate":
        if res["status"] != _kernels.STATUS_COMPLETE:
            raise BudgetExceeded("enumeration did not complete", stats=stats,
                                 checkpoint=format_checkpoint(
                                     res["frontier"] or ()))
        colorings = [EdgeColoring(host, problem.k, cols)
                     for cols in res["colorings"]]
        return colorings, stats
    if res["witness"] is not None:
        witness = EdgeColoring(host, problem.k, res["witness"])
        _assert_good(problem, witness)
        return ArrowsOutcome(False, witness, stats)
    if res["status"] != _kernels.STATUS_COMPLETE:
        raise BudgetExceeded(
            f"budget of {node_budget} nodes exhausted", stats=stats,
            checkpoint=format_checkpoint(res["frontier"] or ()))
    return ArrowsOutcome(True, None, stats)


def _assert_good(problem: SearchProblem, coloring: EdgeColoring):
    """Witnesses must re-verify through the detectors."""
    if problem.forbid_rainbow_triangle:
        assert find_rainbow_triangle(coloring) is None
    for c in range(1, problem.k + 1):
        per = problem.targets[c - 1]
        per = (per,) if isinstance(per, TargetGraph) else per
        for H in per:
            assert find_monochromatic(coloring, H, c) is None


# ---------------------------------------------------------------------------
# threshold searches
# ---------------------------------------------------------------------------

def _threshold_over_n(make_problem, lo: int, n_max: int, node_budget: int,
                      what: str) -> SearchResult:
    stats = SearchStats()
    witness = None
    for n in range(lo, n_max + 1):
        outcome = arrows(make_problem(n), node_budget=node_budget)
        stats.add(outcome.stats)
        if outcome.holds:
            return SearchResult(n, witness, stats)
        witness = outcome.counterexample
    raise NotFoundWithinBound(f"{what} not found up to {n_max}")


def ramsey2(h1: TargetGraph, h2: TargetGraph, n_max: int = 12,
            node_budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    """Least n such that every 2-coloring of K_n has h1 in color 1 or h2 in 2."""
    return _threshold_over_n(
        lambda n: SearchProblem(HostGraph.complete(n), 2, (h1, h2), False),
        2, n_max, node_budget, f"ramsey2({h1!r},{h2!r})")


def ramsey2_family(members, n_max: int = 12,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    """Least n forcing a one-colored member of the family in some color."""
    members = tuple(members)
    return _threshold_over_n(
        lambda n: SearchProblem(HostGraph.complete(n), 2,
                                (members, members), False),
        2, n_max, node_budget, "family threshold")


def star_critical_ramsey2(h1: TargetGraph, h2: TargetGraph | None = None,
                          r2: int | None = None,
                          node_budget: int = DEFAULT_NODE_BUDGET
                          ) -> SearchResult:
    """Least star size s with K_{n-1} plus an s-star forced, n the 2-color
    threshold."""
    h2 = h2 or h1
    if r2 is None:
        r2 = ramsey2(h1, h2, node_budget=node_budget).value
    return _star_threshold(2, ((h1,), (h2,)), r2, False, node_budget)


def star_critical_ramsey2_family(members, m_h: int | None = None,
                                 node_budget: int = DEFAULT_NODE_BUDGET
                                 ) -> SearchResult:
    members = tuple(members)
    if m_h is None:
        m_h = ramsey2_family(members, node_budget=node_budget).value
    return _star_threshold(2, (members, members), m_h, False, node_budget)


def _star_threshold(k: int, targets_per_color, n: int, rainbow: bool,
                    node_budget: int) -> SearchResult:
    stats = SearchStats()
    witness = None
    for s in range(0, n):
        host = HostGraph.star_extension(n - 1, s)
        problem = SearchProblem(host, k, tuple(targets_per_color), rainbow)
        outcome = arrows(problem, node_budget=node_budget)
        stats.add(outcome.stats)
        if outcome.holds:
            return SearchResult(s, witness, stats)
        witness = outcome.counterexample
    raise NotFoundWithinBound(
        f"the full host K_{n} does not arrow; inconsistent threshold {n}")


def gallai_ramsey_number(k: int, targets, n_max: int = 16,
                         node_budget: int = DEFAULT_NODE_BUDGET
                         ) -> SearchResult:
    """Least n forcing a rainbow triangle or a one-colored target in K_n."""
    targets = normalize_targets(k, targets)
    return _threshold_over_n(
        lambda n: SearchProblem(HostGraph.complete(n), k, targets, True),
        2, n_max, node_budget, f"gallai threshold k={k}")


# ---------------------------------------------------------------------------
# star-critical search over the extension host
# ---------------------------------------------------------------------------

def star_critical_gallai_number(k: int, targets, gr: int | None = None,
                                strategy: str = "direct",
                                node_budget: int = DEFAULT_NODE_BUDGET,
                                n_max: int = 16) -> SearchResult:
    """Least star size forcing the extension host, at n = the k-color
    threshold.

    Strategy "direct" runs the full DFS over the extension host; "extend"
    enumerates critical clique colorings up to isomorphism and colors only
    the star edges on top of each; "both" runs the two and asserts agreement.
    """
    targets = normalize_targets(k, targets)
    if gr is None:
        gr = gallai_ramsey_number(k, targets, n_max=n_max,
                                  node_budget=node_budget).value
    if strategy == "both":
        a = star_critical_gallai_number(k, targets, gr=gr, strategy="direct",
                                        node_budget=node_budget)
        b = star_critical_gallai_number(k, targets, gr=gr, strategy="extend",
                                        node_budget=node_budget)
        assert a.value == b.value, f"strategies disagree: {a.value} vs {b.value}"
        b.stats.add(a.stats)
        return b
    if strategy == "direct":
        return _star_threshold(k, [(t,) for t in targets], gr, True,
                               node_budget)
    if strategy != "extend":
        raise BadParameter(f"unknown strategy {strategy!r}")
    return _star_threshold_by_extension(k, targets, gr, node_budget)


def _colored_automorphism_group(coloring: EdgeColoring, cap: int = 8):
    """Vertex permutations preserving the coloring up to a color bijection."""
    n = coloring.host.n
    if n > cap:
        return [tuple(range(n))]
    rows = coloring._rows
    perms = []
    for perm in itertools.permutations(range(n)):
        cmap = {}
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                a = rows[u][v]
                b = rows[perm[u]][perm[v]]
                have = cmap.get(a)
                if have is None:
                    if b in cmap.values():
                        ok = False
                        break
                    cmap[a] = b
                elif have != b:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            perms.append(perm)
    return perms


def _attachment_orbits(coloring: EdgeColoring, s: int):
    """One representative attachment set per orbit of the colored clique."""
    n = coloring.host.n
    group = _colored_automorphism_group(coloring)
    seen = set()
    reps = []
    for att in itertools.combinations(range(n), s):
        canon = min(tuple(sorted(p[a] for a in att)) for p in group)
        if canon not in seen:
            seen.add(canon)
            reps.append(att)
    return reps


def _star_threshold_by_extension(k: int, targets, n: int,
                                 node_budget: int) -> SearchResult:
    criticals, stats = enumerate_critical_colorings(
        k, targets, n - 1, node_budget=node_budget, with_stats=True)
    targets_per_color = tuple((t,) for t in targets)
    checkers = compile_color_checkers(k, targets_per_color)
    witness = None
    for s in range(0, n):
        found = None
        for crit in criticals:
            for att in _attachment_orbits(crit, s):
                host = HostGraph.star_extension(n - 1, s, att)
                edges = host.edges()
                fixed = list(crit.colors) + [0] * s
                t0 = time.perf_counter()
                res = _kernels.dfs_search(
                    host.n, edges, k, fixed, True, False, checkers,
                    _kernels.MODE_DECIDE, node_budget, 1, None)
                stats.add(SearchStats(res["nodes"], res["prunes"],
                                      time.perf_counter() - t0))
                if res["status"] != _kernels.STATUS_COMPLETE:
                    raise BudgetExceeded("extension search out of budget",
                                         stats=stats)
                if res["witness"] is not None:
                    found = EdgeColoring(host, k, res["witness"])
                    break
            if found is not None:
                break
        if found is None:
            return SearchResult(s, witness, stats)
        witness = found
    raise NotFoundWithinBound(f"no star size up to {n - 1} settles the host")


# ---------------------------------------------------------------------------
# critical-coloring enumeration
# ---------------------------------------------------------------------------

def enumerate_critical_colorings(k: int, targets, n: int,
                                 node_budget: int = DEFAULT_NODE_BUDGET,
                                 collect_limit: int = 1_000_000,
                                 with_stats: bool = False):
    """All colorings of K_n avoiding rainbow triangles and the targets,
    deduplicated up to vertex-and-color isomorphism."""
    targets = normalize_targets(k, targets)
    problem = SearchProblem(HostGraph.complete(n), k, targets, True)
    colorings, stats = arrows(problem, node_budget=node_budget,
                              mode="enumerate", collect_limit=collect_limit)
    reps = {}
    for col in colorings:
        key = canonical_key(col, bound=max(n, 10))
        if key not in reps:
            reps[key] = col
    out = [reps[key] for key in sorted(reps)]
    if with_stats:
        return out, stats
    return out


# ---------------------------------------------------------------------------
# merge families
# ---------------------------------------------------------------------------

def _independent_partitions(n: int, adj):
    """Partitions of the vertex set into independent blocks (as index lists)."""
    items: list = []
    masks: list = []

    def rec(v: int):
        if v == n:
            yield [list(b) for b in items]
            return
        bit = 1 << v
        for i in range(len(items)):
            if not (masks[i] & adj[v]):
                masks[i] |= bit
                items[i].append(v)
                yield from rec(v + 1)
                items[i].pop()
                masks[i] &= ~bit
        items.append([v])
        masks.append(bit)
        yield from rec(v + 1)
        items.pop()
        masks.pop()

    yield from rec(0)


def enumerate_merges(H: TargetGraph, max_order: int = 8) -> MergeFamily:
    """All quotients of H by partitions into independent sets, up to
    isomorphism; H itself is the all-singleton quotient."""
    profile = classify_target(H)
    if profile.bipartite:
        raise BipartiteInput("merges are defined for non-bipartite graphs")
    if H.n > max_order:
        raise TooLarge(f"merge enumeration bounded at {max_order} vertices")
    adj = H.adjacency()
    members = []
    for part in _independent_partitions(H.n, adj):
        q = len(part)
        block_of = {}
        for bi, items in enumerate(part):
            for v in items:
                block_of[v] = bi
        edges = set()
        for u, v in H.edges:
            a, b = block_of[u], block_of[v]
            if a != b:
                edges.add((min(a, b), max(a, b)))
        candidate = TargetGraph.of(q, edges, f"{H.label}/q{q}" if H.label else "")
        if not any(graphs_isomorphic(candidate, m) for m in members):
            members.append(candidate)
    members.sort(key=lambda t: (t.n, len(t.edges)))
    return MergeFamily(H, tuple(members))


def merge_parameters(H: TargetGraph, n_max: int = 12,
                     node_budget: int = DEFAULT_NODE_BUDGET) -> MergeFamily:
    """Merge family plus its 2-color threshold and star-critical threshold."""
    fam = enumerate_merges(H)
    mres = ramsey2_family(fam.members, n_max=n_max, node_budget=node_budget)
    rres = star_critical_ramsey2_family(fam.members, m_h=mres.value,
                                        node_budget=node_budget)
    return MergeFamily(H, fam.members, mres.value, rres.value,
                       mres.witness, rres.witness)


# ---------------------------------------------------------------------------
# fullness
# ---------------------------------------------------------------------------

@dataclass
class FullnessReport:
    target: TargetGraph
    k: int
    gr: int
    gr_star: int
    gallai_full: bool
    r2: int
    r_star: int
    ramsey_full: bool
    conjecture_agrees: bool
    gr_exact: bool = True
    gr_star_exact: bool = True


def fullness_check(k: int, H: TargetGraph,
                   node_budget: int = DEFAULT_NODE_BUDGET,
                   n_max: int = 16,
                   known_gr: int | None = None,
                   known_gr_star: int | None = None) -> FullnessReport:
    """Compare the star-critical value against threshold-minus-one, and probe
    the agreement between the two fullness notions.

    ``known_gr``/``known_gr_star`` substitute externally certified values when
    the exact search is out of budget; the report flags them as inexact.
    """
    r2 = ramsey2(H, H, n_max=n_max, node_budget=node_budget).value
    r_star = star_critical_ramsey2(H, r2=r2, node_budget=node_budget).value
    gr_exact = known_gr is None
    gr = known_gr if known_gr is not None else gallai_ramsey_number(
        k, H, n_max=n_max, node_budget=node_budget).value
    gr_star_exact = known_gr_star is None
    gr_star = known_gr_star if known_gr_star is not None else \
        star_critical_gallai_number(k, H, gr=gr, strategy="direct",
                                    node_budget=node_budget).value
    gallai_full = gr_star == gr - 1
    ramsey_full = r_star == r2 - 1
    return FullnessReport(H, k, gr, gr_star, gallai_full, r2, r_star,
                          ramsey_full, ramsey_full == gallai_full,
                          gr_exact, gr_star_exact)


# ---------------------------------------------------------------------------
# seed assembly for the tower builders
# ---------------------------------------------------------------------------

def tower_seeds_from_search(H: TargetGraph, n_max: int = 12,
                            node_budget: int = DEFAULT_NODE_BUDGET):
    """Search-produced critical inputs for the non-bipartite tower."""
    from .constructions import TowerSeeds, TwoColorCritical

    r2res = ramsey2(H, H, n_max=n_max, node_budget=node_budget)
    rstar = star_critical_ramsey2(H, r2=r2res.value, node_budget=node_budget)
    fam = merge_parameters(H, n_max=n_max, node_budget=node_budget)
    return TowerSeeds(
        base=TwoColorCritical(r2res.witness, (H,)),
        base_extension=TwoColorCritical(rstar.witness, (H,)),
        merge_critical=TwoColorCritical(fam.m_witness, fam.members),
        merge_extension=TwoColorCritical(fam.r_witness, fam.members),
    )


def bipartite_seeds_from_search(H: TargetGraph, n_max: int = 12,
                                node_budget: int = DEFAULT_NODE_BUDGET):
    """Search-produced critical core and star extension for a bipartite H."""
    from .constructions import TwoColorCritical

    r2res = ramsey2(H, H, n_max=n_max, node_budget=node_budget)
    rstar = star_critical_ramsey2(H, r2=r2res.value, node_budget=node_budget)
    return (TwoColorCritical(r2res.witness, (H,)),
            TwoColorCritical(rstar.witness, (H,)))
