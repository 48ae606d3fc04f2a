import numpy as np
import pytest

from hodt.census import enumerate_all_triangulations
from hodt.errors import CapExceededError
from oracles import catalan, convex_polygon, naive_count, naive_triangulations


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_convex_polygon_counts_are_catalan(m):
    census = enumerate_all_triangulations(convex_polygon(m, seed=m))
    assert census.total == catalan(m - 2)


@pytest.mark.parametrize("seed", range(6))
def test_matches_edge_set_enumeration(seed):
    pts = np.random.default_rng(seed).random((6, 2))
    census = enumerate_all_triangulations(pts)
    got = sorted(sorted(t) for t in map(frozenset, census.triangulations))
    want = sorted(sorted(t) for t in naive_triangulations(pts))
    assert got == want


@pytest.mark.parametrize("seed", range(3))
def test_order_table_partitions_total(seed):
    pts = np.random.default_rng(100 + seed).random((8, 2))
    census = enumerate_all_triangulations(pts)
    assert sum(census.counts.values()) == census.total
    assert census.count_exactly(0) == 1
    for k in range(6):
        assert census.count_at_most(k) == sum(v for o, v in census.counts.items() if o <= k)
        assert len(census.sets_at_most(k)) == census.count_at_most(k)
    for tris, o in zip(census.triangulations[:20], census.orders[:20]):
        assert o == max(naive_count(t, pts) for t in tris)


def test_min_order_by_edge_is_monotone_in_census():
    pts = np.random.default_rng(7).random((7, 2))
    census = enumerate_all_triangulations(pts)
    best = census.min_order_by_edge()
    for tris, o in zip(census.triangulations, census.orders):
        for a, b, c in tris:
            for e in ((a, b), (a, c), (b, c)):
                assert best[e] <= o


def test_cap():
    pts = np.random.default_rng(0).random((13, 2))
    with pytest.raises(CapExceededError):
        enumerate_all_triangulations(pts)
    with pytest.raises(CapExceededError):
        enumerate_all_triangulations(pts[:6], cap=5)
