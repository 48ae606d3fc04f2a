import itertools

import numpy as np
import pytest

from hodt.census import enumerate_all_triangulations
from hodt.delaunay import delaunay_triangulate
from hodt.hulls import (
    HullUndefinedError,
    edge_hull,
    lower_bound_constant,
    polygon_triangulations,
    construct_orderk,
    select_disjoint_hulls,
)
from hodt.orders import triangulation_order, useful_edges, useful_k_edges
from hodt.quads import flippable_quads
from oracles import catalan, convex_polygon, frac_orient, segment_hits_triangle_interior, segments_cross


def test_constant():
    assert lower_bound_constant(1) == 46
    assert lower_bound_constant(2) == 226


def test_quad_diagonal_hull_is_the_quad():
    pts = np.random.default_rng(0).random((30, 2))
    T = delaunay_triangulate(pts)
    for q in flippable_quads(T):
        h = edge_hull(q.alternative_diagonal, T)
        assert len(h.triangles) == 2 and h.n_vertices == 4
        assert set(h.boundary) == set(q.quad)


@pytest.mark.parametrize("seed", range(4))
def test_hull_is_the_set_of_crossed_triangles(seed):
    pts = np.random.default_rng(seed).random((12, 2))
    T = delaunay_triangulate(pts)
    for u, v in itertools.combinations(range(12), 2):
        if T.has_edge(u, v):
            with pytest.raises(HullUndefinedError):
                edge_hull((u, v), T)
            continue
        h = edge_hull((u, v), T)
        want = {t for t in T.triangle_set() if segment_hits_triangle_interior(pts[u], pts[v], pts[list(t)])}
        assert h.triangle_set == want
        b = h.boundary
        assert b[0] == u and v in b
        assert len(set(b)) == len(b) == len(h.triangles) + 2
        # counterclockwise: positive signed area
        area = sum(pts[b[i]][0] * pts[b[i - 1]][1] - pts[b[i - 1]][0] * pts[b[i]][1] for i in range(len(b)))
        assert area < 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hull_size_and_crossing_bounds(k):
    for seed in range(5):
        pts = np.random.default_rng(50 + seed).random((12, 2))
        T = delaunay_triangulate(pts)
        useful = useful_edges(T, k, "exhaustive")
        for e, w in useful.items():
            assert edge_hull(e, T).n_vertices <= 2 * w.useful_order + 2
        for a, b in T.edges():
            crossing = sum(1 for u, v in useful if segments_cross(pts, a, b, u, v))
            assert crossing <= (2 * k + 1) ** 2


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8])
def test_convex_polygon_triangulations_catalan(m):
    P = convex_polygon(m, seed=m).tolist()
    tris = polygon_triangulations(tuple(range(m)), P)
    assert len(tris) == catalan(m - 2)
    assert len(set(tris)) == len(tris)


def test_nonconvex_polygon_triangulations():
    # an L-shaped hexagon has exactly 4 triangulations
    P = [[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]]
    assert frac_orient(P[0], P[1], P[2]) > 0
    assert len(polygon_triangulations(tuple(range(6)), P)) == 4


def test_select_disjoint_greedy_examples():
    pts = np.random.default_rng(3).random((40, 2))
    T = delaunay_triangulate(pts)
    edges = useful_k_edges(pts, 2, T=T)
    cert = select_disjoint_hulls(edges, T, 2)
    assert cert.C_k == 226
    assert cert.bound == 2 ** len(cert.selected) - 1
    assert cert.bound >= cert.guaranteed
    for e, f in itertools.combinations(cert.selected, 2):
        assert not cert.hulls[e].triangle_set & cert.hulls[f].triangle_set
    # shortest edge always gets picked
    assert cert.selected[0] == cert.edges[0]
    empty = select_disjoint_hulls([], T, 2)
    assert empty.selected == [] and empty.bound == 0


@pytest.mark.parametrize("seed", range(3))
def test_construct_order2_against_census(seed):
    pts = np.random.default_rng(200 + seed).random((10, 2))
    T = delaunay_triangulate(pts)
    cert = select_disjoint_hulls(useful_k_edges(pts, 2, T=T), T, 2)
    census = enumerate_all_triangulations(pts)
    exact2 = {frozenset(t) for t in census.with_order(2)}
    built = set()
    for r in range(1, len(cert.selected) + 1):
        for subset in itertools.combinations(cert.selected, r):
            R = construct_orderk(T, cert, subset)
            R.validate()
            assert triangulation_order(R) == 2
            for e in subset:
                assert R.has_edge(*e)
            built.add(frozenset(R.triangle_set()))
    assert len(built) == cert.bound
    assert built <= exact2
    assert census.count_exactly(2) >= cert.bound


def test_construct_rejects_bad_subsets():
    pts = np.random.default_rng(5).random((20, 2))
    T = delaunay_triangulate(pts)
    cert = select_disjoint_hulls(useful_k_edges(pts, 2, T=T), T, 2)
    with pytest.raises(ValueError):
        construct_orderk(T, cert, [])
    with pytest.raises(ValueError):
        construct_orderk(T, cert, [T.edges()[0]])
