"""Builders, certificates and the explicit two-color seeds."""

import random

import pytest

from gallaistar.core import (
    EdgeColoring,
    HostGraph,
    clique_graph,
    cycle_graph,
    find_monochromatic,
    find_rainbow_triangle,
    make_coloring,
    path_graph,
    star_graph,
    target_from_name,
)
from gallaistar.constructions import (
    TowerSeeds,
    TwoColorCritical,
    bipartite_seeds,
    blow_up,
    build_bipartite_lower,
    build_c4_critical,
    build_nonbipartite_lower,
    build_p4_critical,
    build_star_critical,
    c4_critical_core,
    c4_critical_extension,
    clone_extension,
    coloring_from_certificate,
    extend_bipartite_lower,
    extend_c4_lower,
    extend_nonbipartite_lower,
    extend_p4_lower,
    extend_star_lower,
    five_cycle_seeds,
    matching_c4_coloring,
    p4_critical_core,
    p4_critical_extension,
    pentagon_coloring,
    split_k8_coloring,
    triangle_seeds,
)
from gallaistar.errors import (
    BadCritical,
    BadInnerRule,
    BadInnerSpec,
    BadParameter,
    ColorRangeMismatch,
    EdgeNotInHost,
    NotBipartite,
    NotNonBipartite,
)
from gallaistar.gallai import random_gallai_coloring


class TestClone:
    def test_mono_edge_clone_is_triangle_free_path(self):
        g = EdgeColoring(HostGraph.complete(2), 1, [1])
        cl = clone_extension(g, 0)
        assert cl.host.describe() == "K2+1:1"
        assert find_monochromatic(cl, clique_graph(3), 1) is None

    def test_clone_of_two_color_triangle_critical(self):
        cl = clone_extension(pentagon_coloring(), 2)
        assert find_rainbow_triangle(cl) is None
        for c in (1, 2):
            assert find_monochromatic(cl, clique_graph(3), c) is None

    def test_clone_preserves_rainbow_freeness(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_gallai_coloring(rng.randint(2, 7), 3, rng)
            u = rng.randrange(g.host.n)
            assert find_rainbow_triangle(clone_extension(g, u)) is None

    def test_clone_preserves_clique_classes_exactly(self):
        rng = random.Random(17)
        for _ in range(40):
            n = rng.randint(3, 6)
            host = HostGraph.complete(n)
            g = EdgeColoring(host, 2, [rng.randint(1, 2)
                                       for _ in range(host.edge_count)])
            cl = clone_extension(g, rng.randrange(n))
            for p in (3, 4):
                for c in (1, 2):
                    assert (find_monochromatic(g, clique_graph(p), c)
                            is None) == \
                        (find_monochromatic(cl, clique_graph(p), c) is None)

    def test_clone_does_not_preserve_four_cycles(self):
        # two equal colors at the cloned vertex close a four-cycle through
        # the center, so criticality transfer is clique-specific
        cl = clone_extension(pentagon_coloring(), 0)
        assert find_monochromatic(cl, cycle_graph(4), 1) is not None


class TestC4Family:
    def test_smallest_is_the_five_vertex_core(self):
        cert = build_c4_critical(2)
        assert cert.actual_vertices == 5
        assert cert.coloring.colors == pentagon_coloring().colors

    def test_appended_vertex_color(self):
        cert = build_c4_critical(3)
        g = cert.coloring
        assert all(g.color(5, i) == 3 for i in range(5))

    def test_verdicts_to_k10(self):
        for k in (5, 10):
            cert = build_c4_critical(k)
            assert cert.passed and cert.actual_vertices == k + 3

    def test_extension_star_sizes(self):
        for k in (2, 3):
            cert = extend_c4_lower(k)
            assert cert.actual_star == k + 2
            assert cert.coloring.host.center is not None

    def test_center_to_v5_not_an_edge(self):
        host = extend_c4_lower(2).coloring.host
        edges = [(u, v, 1) for u, v in host.edges()] + [(4, host.center, 1)]
        with pytest.raises(EdgeNotInHost):
            make_coloring(host, 2, edges)

    def test_bad_parameter(self):
        with pytest.raises(BadParameter):
            build_c4_critical(1)


class TestP4Family:
    def test_k1_is_one_triangle(self):
        cert = build_p4_critical(1)
        assert cert.actual_vertices == 3
        assert set(cert.coloring.colors) == {1}

    def test_paper_inner_rules_for_k4(self):
        def rule_a(i, j):
            return {(4, 5): 2, (4, 6): 2, (5, 6): 3}[(i, j)]

        def rule_b(i, j):
            return {(4, 5): 2, (4, 6): 4, (5, 6): 4}[(i, j)]

        for rule in (rule_a, rule_b, None):
            cert = build_p4_critical(4, rule)
            assert cert.passed and cert.actual_vertices == 6

    def test_bad_inner_rules(self):
        with pytest.raises(BadInnerRule):
            build_p4_critical(4, lambda i, j: 5)
        # pairwise-admissible choices that still build a rainbow triangle
        rainbow = {(4, 5): 2, (4, 6): 4, (5, 6): 3}
        with pytest.raises(BadInnerRule):
            build_p4_critical(4, lambda i, j: rainbow[(i, j)])

    def test_extension_star_sizes(self):
        for k, star in ((2, 1), (3, 2), (5, 4)):
            cert = extend_p4_lower(k)
            assert cert.actual_star == star and cert.passed


class TestStarFamily:
    def test_m3_is_bare_two_five_cycles(self):
        cert = build_star_critical(3, 3)
        assert cert.actual_vertices == 5
        assert cert.coloring.colors == pentagon_coloring().colors

    def test_odd_and_even_sizes(self):
        assert build_star_critical(13, 5).actual_vertices == 30
        assert build_star_critical(12, 4).actual_vertices == 26

    def test_even_matching_conditions(self):
        matching = {1: [(0, 1, 1), (2, 3, 2)]
                    + [(u, v, 3) for u in range(6) for v in range(u + 1, 6)
                       if (u, v) not in ((0, 1), (2, 3))]}
        cert = build_star_critical(12, 4, matching)
        assert cert.passed
        path2 = {1: [(0, 1, 1), (1, 2, 1)]
                 + [(u, v, 3) for u in range(6) for v in range(u + 1, 6)
                    if (u, v) not in ((0, 1), (1, 2))]}
        with pytest.raises(BadInnerSpec):
            build_star_critical(12, 4, path2)

    def test_palette_conditions_by_part(self):
        # odd parts may not use the two join colors at all
        bad = {1: [(0, 1, 1)]}  # parts are K_2 at m=5: one inner edge
        with pytest.raises(BadInnerSpec):
            build_star_critical(5, 3, bad)
        # part 2 may carry color 2 only as a matching, color 1 never
        def fill(first, size):
            return [first] + [(u, v, 3) for u in range(size)
                              for v in range(u + 1, size)
                              if (u, v) != first[:2]]

        with pytest.raises(BadInnerSpec):
            build_star_critical(12, 3, {2: fill((0, 1, 1), 5)})
        assert build_star_critical(12, 3, {2: fill((0, 1, 2), 5)}).passed

    def test_random_matching_acceptance_boundary(self):
        rng = random.Random(19)
        m, k = 12, 4
        for _ in range(25):
            verts = list(range(6))
            rng.shuffle(verts)
            pairs = [(min(verts[0], verts[1]), max(verts[0], verts[1])),
                     (min(verts[2], verts[3]), max(verts[2], verts[3]))]
            spec = {1: [(u, v, rng.choice((1, 2))) for u, v in pairs]
                    + [(u, v, 3) for u in range(6) for v in range(u + 1, 6)
                       if (u, v) not in pairs]}
            assert build_star_critical(m, k, spec).passed
            # grow one matching edge into a path: must be rejected
            u, v = pairs[0]
            w = next(x for x in range(6) if x not in (u, v))
            bad_pairs = pairs + [(min(v, w), max(v, w))]
            spec_bad = {1: [(a, b, 1) for a, b in bad_pairs]
                        + [(a, b, 3) for a in range(6)
                           for b in range(a + 1, 6)
                           if (a, b) not in bad_pairs]}
            with pytest.raises(BadInnerSpec):
                build_star_critical(m, k, spec_bad)

    def test_extension_sizes(self):
        assert extend_star_lower(3, 3).actual_star == 2
        assert extend_star_lower(12, 3).actual_star == 21
        assert extend_star_lower(5, 4).actual_star == 4

    def test_small_even_extension_refused(self):
        with pytest.raises(BadParameter):
            extend_star_lower(6, 3)

    def test_small_even_build_carries_note(self):
        cert = build_star_critical(4, 3)
        assert cert.passed and cert.notes


class TestBlowUp:
    def test_edge_of_singletons(self):
        outer = EdgeColoring(HostGraph.complete(2), 1, [1])
        ones = [EdgeColoring(HostGraph.complete(1), 1, [])] * 2
        out = blow_up(outer, ones)
        assert out.host.n == 2 and out.colors == (1,)

    def test_two_copies_of_an_edge(self):
        outer = EdgeColoring(HostGraph.complete(2), 2, [1])
        inner = EdgeColoring(HostGraph.complete(2), 2, [2])
        out = blow_up(outer, [inner, inner])
        assert out.host.n == 4
        assert sorted(out.colors).count(2) == 2
        assert sorted(out.colors).count(1) == 4

    def test_color_range_mismatch(self):
        outer = EdgeColoring(HostGraph.complete(2), 3, [3])
        inner = EdgeColoring(HostGraph.complete(1), 1, [])
        with pytest.raises(ColorRangeMismatch):
            blow_up(outer, [inner, inner], k=2)


class TestBipartiteFamily:
    def test_p4_counts(self):
        core_seed, ext_seed = bipartite_seeds(path_graph(4))
        cert = build_bipartite_lower(4, path_graph(4), core_seed)
        assert cert.actual_vertices == 6
        ext = extend_bipartite_lower(3, path_graph(4), ext_seed)
        assert ext.actual_star == 2
        ext5 = extend_bipartite_lower(5, path_graph(4), ext_seed)
        assert ext5.actual_star == 4

    def test_c4_counts(self):
        core_seed, ext_seed = bipartite_seeds(cycle_graph(4))
        assert build_bipartite_lower(3, cycle_graph(4),
                                     core_seed).actual_vertices == 6
        two = build_bipartite_lower(2, cycle_graph(4), core_seed)
        assert two.coloring.colors == core_seed.coloring.colors
        assert extend_bipartite_lower(2, cycle_graph(4),
                                      ext_seed).actual_star == 4

    def test_rejects_nonbipartite(self):
        with pytest.raises(NotBipartite):
            build_bipartite_lower(3, clique_graph(3),
                                  bipartite_seeds(path_graph(4))[0])

    def test_rejects_bad_core(self):
        mono = TwoColorCritical(
            EdgeColoring(HostGraph.complete(3), 2, [1, 1, 2]),
            clique_graph(3))
        with pytest.raises(BadCritical):
            build_bipartite_lower(3, path_graph(4), mono)


class TestTowerFamily:
    def test_triangle_counts_and_stars(self):
        seeds = triangle_seeds()
        K3 = clique_graph(3)
        expected_n = {2: 5, 3: 10, 4: 25, 5: 50, 6: 125, 7: 250}
        expected_star = {2: 4, 3: 5, 4: 20, 5: 25, 6: 100, 7: 125}
        for k in range(2, 8):
            cert = build_nonbipartite_lower(k, K3, seeds)
            assert cert.actual_vertices == expected_n[k]
            ext = extend_nonbipartite_lower(k, K3, seeds)
            assert ext.actual_star == expected_star[k]

    def test_five_cycle_counts_and_stars(self):
        seeds = five_cycle_seeds()
        C5 = cycle_graph(5)
        expected_n = {2: 8, 3: 16, 4: 32, 5: 64, 6: 128, 7: 256}
        expected_star = {2: 5, 3: 8, 4: 24, 5: 32, 6: 96, 7: 128}
        for k in range(2, 8):
            cert = build_nonbipartite_lower(k, C5, seeds)
            assert cert.actual_vertices == expected_n[k]
            ext = extend_nonbipartite_lower(k, C5, seeds)
            assert ext.actual_star == expected_star[k]

    def test_rejects_bipartite(self):
        with pytest.raises(NotNonBipartite):
            build_nonbipartite_lower(3, path_graph(4), triangle_seeds())

    def test_even_levels_need_merge_input(self):
        seeds = TowerSeeds(base=triangle_seeds().base)
        with pytest.raises(BadCritical):
            build_nonbipartite_lower(4, clique_graph(3), seeds)

    def test_seed_criticality_is_checked(self):
        bad = EdgeColoring(HostGraph.complete(5), 2, [1] * 10)
        with pytest.raises(BadCritical):
            TwoColorCritical(bad, clique_graph(3))


class TestSeeds:
    def test_explicit_seeds_verify(self):
        triangle_seeds()
        five_cycle_seeds()
        p4_critical_core(), p4_critical_extension()
        c4_critical_core(), c4_critical_extension()

    def test_split_coloring_avoids_five_cycles(self):
        g = split_k8_coloring()
        for c in (1, 2):
            assert find_monochromatic(g, cycle_graph(5), c) is None

    def test_matching_coloring_avoids_all_merges(self):
        g = matching_c4_coloring()
        from gallaistar.search import enumerate_merges

        for member in enumerate_merges(cycle_graph(5)).members:
            for c in (1, 2):
                assert find_monochromatic(g, member, c) is None


class TestCertificates:
    def test_json_roundtrip(self):
        cert = build_c4_critical(3)
        back = coloring_from_certificate(cert.to_dict())
        assert back == cert.coloring

    def test_target_labels_present(self):
        cert = build_star_critical(3, 3)
        d = cert.to_dict()
        assert d["targets"][0] == ["K1_3"]
        assert d["counts"]["expected_vertices"] == 5
