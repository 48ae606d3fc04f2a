import numpy as np
import pytest

from hodt.census import enumerate_all_triangulations
from hodt.delaunay import delaunay_triangulate
from hodt.errors import CapExceededError
from hodt.orders import triangulation_order
from hodt.quads import count_order1, enumerate_order1, fixed_edges_order1, flippable_quads


def test_perturbed_square_has_one_quad():
    pts = np.array([[0, 0], [1, 0], [0, 1], [1, 1.001]])
    quads = flippable_quads(pts)
    assert len(quads) == 1
    q = quads[0]
    assert set(q.quad) == {0, 1, 2, 3}
    assert set(q.delaunay_diagonal) | set(q.alternative_diagonal) == {0, 1, 2, 3}
    assert count_order1(pts) == (1, 2)
    assert len(q.boundary) == 4


def test_triangle_has_no_quads():
    assert count_order1([[0, 0], [1, 0], [0, 1]]) == (0, 1)


@pytest.mark.parametrize("seed", range(8))
def test_count_matches_census(seed):
    n = 6 + seed % 4
    pts = np.random.default_rng(seed).random((n, 2))
    q, total = count_order1(pts)
    assert total == 2 ** q
    assert enumerate_all_triangulations(pts).count_at_most(1) == total


def test_enumeration_is_the_order1_class():
    pts = np.random.default_rng(11).random((9, 2))
    census = enumerate_all_triangulations(pts)
    found = list(enumerate_order1(pts))
    sets = {frozenset(T.triangle_set()) for T in found}
    assert len(sets) == len(found) == count_order1(pts)[1]
    assert sets == census.sets_at_most(1)
    assert found[0].triangle_set() == delaunay_triangulate(pts).triangle_set()
    for T in found:
        T.validate()
        assert triangulation_order(T) <= 1


def test_enumeration_cap():
    pts = np.random.default_rng(12).random((200, 2))
    with pytest.raises(CapExceededError):
        next(enumerate_order1(pts, cap=3))


def test_fixed_edges_are_in_every_order1_triangulation():
    pts = np.random.default_rng(13).random((9, 2))
    fixed = set(fixed_edges_order1(pts))
    census = enumerate_all_triangulations(pts)
    common = None
    for tris in census.with_order(0) + census.with_order(1):
        es = {e for a, b, c in tris for e in ((a, b), (a, c), (b, c))}
        common = es if common is None else common & es
    assert fixed == common
