"""Partition extraction and verification over rainbow-free colorings."""

import random

import pytest

from gallaistar.core import EdgeColoring, HostGraph, make_coloring
from gallaistar.constructions import (
    blow_up,
    build_c4_critical,
    build_star_critical,
    pentagon_coloring,
)
from gallaistar.errors import (
    NotAPartition,
    RainbowTrianglePresent,
    TooLarge,
)
from gallaistar.gallai import (
    find_gallai_partition,
    format_partition,
    outgoing_colors,
    parse_partition,
    random_gallai_coloring,
    reduced_coloring,
    verify_gallai_partition,
)


def rainbow_k3():
    return make_coloring(HostGraph.complete(3), 3,
                         [(0, 1, 1), (0, 2, 2), (1, 2, 3)])


class TestVerify:
    def test_two_colored_singletons_accept(self):
        rng = random.Random(1)
        host = HostGraph.complete(4)
        g = EdgeColoring(host, 2, [rng.randint(1, 2) for _ in range(6)])
        assert verify_gallai_partition(g, [(0,), (1,), (2,), (3,)]).ok

    def test_mono_bipartition_accept(self):
        g = EdgeColoring(HostGraph.complete(5), 1, [1] * 10)
        assert verify_gallai_partition(g, [(0, 1), (2, 3, 4)]).ok

    def test_rainbow_singletons_reject(self):
        verdict = verify_gallai_partition(rainbow_k3(), [(0,), (1,), (2,)])
        assert not verdict.ok and verdict.third_color == 3

    def test_nonmono_join_reject(self):
        g = make_coloring(HostGraph.complete(4), 2,
                          [(0, 1, 1), (2, 3, 1), (0, 2, 1), (0, 3, 2),
                           (1, 2, 1), (1, 3, 2)])
        verdict = verify_gallai_partition(g, [(0, 1), (2, 3)])
        assert not verdict.ok and verdict.block_pair == (0, 1)

    def test_not_a_partition(self):
        g = EdgeColoring(HostGraph.complete(3), 1, [1, 1, 1])
        with pytest.raises(NotAPartition):
            verify_gallai_partition(g, [(0, 1), (1, 2)])
        with pytest.raises(NotAPartition):
            verify_gallai_partition(g, [(0, 1)])


class TestFind:
    def test_mono_k4_minimal_two_blocks(self):
        g = EdgeColoring(HostGraph.complete(4), 1, [1] * 6)
        part = find_gallai_partition(g, minimal=True)
        assert part.q == 2 and part.minimal

    def test_c4_family_partition(self):
        cert = build_c4_critical(4)
        part = find_gallai_partition(cert.coloring, minimal=True)
        assert verify_gallai_partition(cert.coloring, part.blocks).ok
        # one appended vertex joins everything in its own color
        assert part.q == 2
        assert part.between_colors == frozenset({4})

    def test_two_colored_critical_clique(self):
        from gallaistar.search import enumerate_critical_colorings
        from gallaistar.core import cycle_graph

        crits = enumerate_critical_colorings(2, cycle_graph(4), 5)
        for crit in crits:
            part = find_gallai_partition(crit)
            assert part.between_colors <= {1, 2}

    def test_rainbow_rejected(self):
        with pytest.raises(RainbowTrianglePresent):
            find_gallai_partition(rainbow_k3())

    def test_exhaustive_bound(self):
        g = EdgeColoring(HostGraph.complete(13), 1, [1] * 78)
        with pytest.raises(TooLarge):
            find_gallai_partition(g, minimal=True, exhaustive_bound=12)

    def test_greedy_on_random_blowups(self):
        rng = random.Random(97)
        for _ in range(150):
            g = random_gallai_coloring(rng.randint(2, 10), 4, rng)
            part = find_gallai_partition(g)
            assert verify_gallai_partition(g, part.blocks).ok

    def test_minimal_structure_facts(self):
        # minimal partitions with more than two blocks: never exactly three,
        # and every block sees exactly two outgoing colors
        rng = random.Random(101)
        seen_q = set()
        for _ in range(120):
            g = random_gallai_coloring(rng.randint(3, 8), 3, rng)
            part = find_gallai_partition(g, minimal=True)
            assert part.minimal
            seen_q.add(part.q)
            if part.q > 2:
                assert part.q != 3
                for i in range(part.q):
                    assert len(outgoing_colors(g, part.blocks, i)) == 2
        assert any(q > 2 for q in seen_q)


class TestReduced:
    def test_blow_up_roundtrip(self):
        rng = random.Random(7)
        for _ in range(30):
            q = rng.randint(2, 4)
            outer_host = HostGraph.complete(q)
            outer = EdgeColoring(outer_host, 3,
                                 [rng.randint(1, 3)
                                  for _ in range(outer_host.edge_count)])
            sizes = [rng.randint(1, 3) for _ in range(q)]
            inners = []
            for s in sizes:
                ih = HostGraph.complete(s)
                inners.append(EdgeColoring(
                    ih, 3, [rng.randint(1, 3)
                            for _ in range(ih.edge_count)]))
            big = blow_up(outer, inners)
            blocks = []
            at = 0
            for s in sizes:
                blocks.append(tuple(range(at, at + s)))
                at += s
            assert reduced_coloring(big, blocks).colors == outer.colors

    def test_star_parts_reduce_to_two_five_cycles(self):
        cert = build_star_critical(5, 3)
        blocks = [tuple(range(i * 2, i * 2 + 2)) for i in range(5)]
        red = reduced_coloring(cert.coloring, blocks)
        assert red.colors == pentagon_coloring().colors

    def test_mono_k4_two_blocks(self):
        g = EdgeColoring(HostGraph.complete(4), 1, [1] * 6)
        red = reduced_coloring(g, [(0, 1), (2, 3)])
        assert red.colors == (1,)


class TestPartitionText:
    def test_roundtrip(self):
        blocks = [(0, 1), (2,), (3, 4)]
        assert parse_partition(format_partition(blocks)) == blocks
        assert parse_partition("0,1;2;3,4") == blocks
