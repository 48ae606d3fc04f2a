import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodt.predicates import (
    Containment,
    DegenerateInputError,
    GridIndex,
    Orientation,
    circumcircle,
    count_in_circumcircle,
    in_circle,
    incircle_many,
    incircle_sign,
    orient,
    orient_many,
    orient_sign,
)
from oracles import adversarial_incircle, adversarial_orient, frac_incircle, frac_orient, naive_count

coord = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)


@pytest.mark.parametrize("p,q,r,expected", [
    ((0, 0), (1, 0), (0, 1), Orientation.COUNTERCLOCKWISE),
    ((0, 0), (1, 1), (2, 2), Orientation.COLLINEAR),
    ((0, 0), (0, 1), (1, 0), Orientation.CLOCKWISE),
])
def test_orient_examples(p, q, r, expected):
    assert orient(p, q, r) == expected


@pytest.mark.parametrize("p,expected", [
    ((1, 1), Containment.INSIDE),
    ((2, 2), Containment.ON),
    ((3, 3), Containment.OUTSIDE),
])
def test_in_circle_examples(p, expected):
    assert in_circle((0, 0), (2, 0), (0, 2), p) == expected


def test_in_circle_collinear_raises():
    with pytest.raises(DegenerateInputError):
        in_circle((0, 0), (1, 1), (2, 2), (5, 0))


@pytest.mark.parametrize("a,b,c,center,r2", [
    ((0, 0), (2, 0), (0, 2), (1, 1), 2),
    ((0, 0), (1, 0), (0.5, 0.5), (0.5, 0), 0.25),
    ((0, 0), (4, 0), (0, 3), (2, 1.5), 6.25),
])
def test_circumcircle_examples(a, b, c, center, r2):
    circ = circumcircle(a, b, c)
    assert circ.center == pytest.approx(center)
    assert circ.radius_squared == pytest.approx(r2)


def test_circumcircle_collinear_raises():
    with pytest.raises(DegenerateInputError):
        circumcircle((0, 0), (1, 1), (3, 3))


def test_orient_adversarial_matches_rationals():
    rng = np.random.default_rng(1)
    cases = adversarial_orient(rng, 4000)
    for p, q, r in cases:
        assert orient_sign(*p, *q, *r) == frac_orient(p, q, r)


def test_incircle_adversarial_matches_rationals():
    rng = np.random.default_rng(2)
    cases = adversarial_incircle(rng, 4000)
    for a, b, c, d in cases:
        if frac_orient(a, b, c) == 0:
            continue
        assert int(in_circle(a, b, c, d)) == frac_incircle(a, b, c, d)


def test_vectorised_predicates_match_scalar():
    rng = np.random.default_rng(3)
    quads = adversarial_incircle(rng, 400)
    for a, b, c, d in quads:
        if orient_sign(*a, *b, *c) == 0:
            continue
        many = incircle_many(a, b, c, np.array([d, a + 1e-9, b]))
        assert many[0] == int(in_circle(a, b, c, d))
        assert many[2] == 0
    tri = adversarial_orient(rng, 400)
    signs = orient_many(tri[0, 0], tri[0, 1], tri[:, 2])
    assert list(signs) == [orient_sign(*tri[0, 0], *tri[0, 1], *r) for r in tri[:, 2]]


@given(point, point, point)
def test_orient_antisymmetric(p, q, r):
    assert orient_sign(*p, *q, *r) == -orient_sign(*q, *p, *r)
    assert orient_sign(*p, *q, *r) == orient_sign(*q, *r, *p)


@settings(max_examples=200)
@given(point, point, point, point)
def test_in_circle_permutation_invariant(a, b, c, d):
    if orient_sign(*a, *b, *c) == 0:
        return
    base = in_circle(a, b, c, d)
    for perm in ((b, c, a), (c, a, b), (b, a, c), (a, c, b)):
        assert in_circle(*perm, d) == base
    # the raw determinant flips with orientation
    raw = incircle_sign(*a, *b, *c, *d)
    assert incircle_sign(*b, *a, *c, *d) == -raw


def test_count_unit_square_corner():
    sq = np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=float)
    assert count_in_circumcircle(0, 1, 2, sq, on_circle="ignore") == 0
    with pytest.raises(DegenerateInputError):
        count_in_circumcircle(0, 1, 2, sq)
    sq[3] -= 1e-3
    assert count_in_circumcircle(0, 1, 2, sq) == 1


def test_count_matches_naive_scan_with_and_without_index():
    rng = np.random.default_rng(4)
    for trial in range(20):
        n = 8 if trial < 10 else 150
        pts = rng.random((n, 2))
        index = GridIndex(pts)
        for _ in range(15):
            t = tuple(int(x) for x in rng.choice(n, 3, replace=False))
            truth = naive_count(t, pts)
            assert count_in_circumcircle(*t, pts) == truth
            assert count_in_circumcircle(*t, pts, index=index) == truth
            for cutoff in (truth, truth + 2):
                assert count_in_circumcircle(*t, pts, cutoff=cutoff, index=index) == truth
            if truth > 0:
                assert count_in_circumcircle(*t, pts, cutoff=truth - 1) > truth - 1


def test_grid_candidates_cover_disk():
    rng = np.random.default_rng(5)
    pts = rng.random((500, 2))
    index = GridIndex(pts)
    for _ in range(50):
        c = rng.random(2)
        r = rng.uniform(0.01, 0.5)
        cand = set(index.candidates(c[0], c[1], r).tolist())
        inside = np.flatnonzero(np.hypot(*(pts - c).T) <= r)
        assert set(inside.tolist()) <= cand
