"""Equivalence between the pure and compiled kernel backends."""

import random

import pytest

from gallaistar import _kernels
from gallaistar._kernels import pure
from gallaistar.core import HostGraph, target_from_name
from gallaistar.search import compile_color_checkers

speedups = pytest.importorskip("gallaistar._kernels._speedups")

NAMES = ["K3", "K4", "P4", "C4", "C5", "K1_3"]


def random_instance(rng):
    n = rng.randint(3, 6)
    k = rng.randint(1, 3)
    tnames = [rng.choice(NAMES) for _ in range(k)]
    targets = tuple((target_from_name(t),) for t in tnames)
    checkers = compile_color_checkers(k, targets)
    if rng.random() < 0.7:
        host = HostGraph.complete(n)
    else:
        host = HostGraph.star_extension(n, rng.randint(0, n))
    symbreak = len(set(tnames)) == 1
    return host, k, checkers, rng.random() < 0.5, symbreak


def test_backend_reported():
    assert _kernels.backend in ("pure", "compiled")


def test_dfs_search_equivalence():
    rng = random.Random(59)
    for _ in range(80):
        host, k, checkers, rainbow, symbreak = random_instance(rng)
        mode = pure.MODE_ENUMERATE if rng.random() < 0.5 else pure.MODE_DECIDE
        args = (host.n, host.edges(), k, None, rainbow, symbreak, checkers,
                mode, 10 ** 9, 10 ** 6, None)
        a = pure.dfs_search(*args)
        b = speedups.dfs_search(*args)
        assert a["status"] == b["status"]
        assert a["nodes"] == b["nodes"]
        assert a["prunes"] == b["prunes"]
        assert a["witness"] == b["witness"]
        assert a["colorings"] == b["colorings"]


def test_dfs_budget_frontier_equivalence():
    rng = random.Random(61)
    for _ in range(30):
        host, k, checkers, rainbow, symbreak = random_instance(rng)
        budget = rng.randint(1, 40)
        args = (host.n, host.edges(), k, None, rainbow, symbreak, checkers,
                pure.MODE_DECIDE, budget, 10 ** 6, None)
        a = pure.dfs_search(*args)
        b = speedups.dfs_search(*args)
        assert a["status"] == b["status"]
        assert a["frontier"] == b["frontier"]


def test_fixed_and_prefix_equivalence():
    rng = random.Random(67)
    for _ in range(30):
        host, k, checkers, rainbow, _ = random_instance(rng)
        m = host.edge_count
        fixed = [rng.randint(1, k) if rng.random() < 0.3 else 0
                 for _ in range(m)]
        prefix = [rng.randint(1, k) for _ in range(rng.randint(0, m // 2))]
        args = (host.n, host.edges(), k, fixed, rainbow, False, checkers,
                pure.MODE_ENUMERATE, 10 ** 9, 10 ** 6, prefix)
        a = pure.dfs_search(*args)
        b = speedups.dfs_search(*args)
        assert a["colorings"] == b["colorings"]
        assert a["nodes"] == b["nodes"]


def test_canonical_equivalence():
    rng = random.Random(71)
    for _ in range(150):
        n = rng.randint(2, 7)
        k = rng.randint(1, 4)
        cols = [rng.randint(1, k) for _ in range(n * (n - 1) // 2)]
        assert pure.canonical_coloring(n, cols) == \
            speedups.canonical_coloring(n, cols)
