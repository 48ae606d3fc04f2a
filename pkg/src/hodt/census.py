"""Exhaustive enumeration of all triangulations of a small point set.

This is the brute-force oracle for every counting claim. Triangles are
added one at a time on the left of the lexicographically smallest open
boundary edge, so each triangulation is produced exactly once.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .delaunay import Edge, as_points
from .errors import CapExceededError, DegenerateInputError
from .predicates import count_in_circumcircle, orient_sign

__all__ = ["TriangulationCensus", "enumerate_all_triangulations"]

Tri = Tuple[int, int, int]


@dataclass
class TriangulationCensus:
    points: np.ndarray = field(repr=False)
    triangulations: List[Tuple[Tri, ...]] = field(repr=False)
    orders: List[int] = field(repr=False)

    @property
    def total(self) -> int:
        return len(self.triangulations)

    @property
    def counts(self) -> Dict[int, int]:
        """R_k: number of triangulations of order exactly k."""
        return dict(sorted(Counter(self.orders).items()))

    def count_at_most(self, k: int) -> int:
        return sum(1 for o in self.orders if o <= k)

    def count_exactly(self, k: int) -> int:
        return sum(1 for o in self.orders if o == k)

    def with_order(self, k: int) -> List[Tuple[Tri, ...]]:
        return [t for t, o in zip(self.triangulations, self.orders) if o == k]

    def sets_at_most(self, k: int) -> set:
        return {frozenset(t) for t, o in zip(self.triangulations, self.orders) if o <= k}

    def min_order_by_edge(self) -> Dict[Edge, int]:
        """For each segment, the least order of a triangulation containing it."""
        best: Dict[Edge, int] = {}
        for tris, o in zip(self.triangulations, self.orders):
            for a, b, c in tris:
                for e in ((a, b), (a, c), (b, c)):
                    if best.get(e, o + 1) > o:
                        best[e] = o
        return dict(sorted(best.items()))


def enumerate_all_triangulations(points, cap: int = 12) -> TriangulationCensus:
    """Every triangulation of the convex hull of ``points`` using all points as vertices.

    Raises
    ------
    CapExceededError
        If there are more than ``cap`` points.
    """
    pts = as_points(points)
    n = len(pts)
    if n > cap:
        raise CapExceededError(f"census of {n} points exceeds the cap of {cap}")
    if n < 3:
        raise ValueError("need at least 3 points")
    P = pts.tolist()

    orient = {}
    for a, b, c in itertools.permutations(range(n), 3):
        s = orient_sign(*P[a], *P[b], *P[c])
        if s == 0:
            raise DegenerateInputError("three collinear points", (a, b, c))
        orient[a, b, c] = s

    eid = {}
    for a, b in itertools.combinations(range(n), 2):
        eid[a, b] = eid[b, a] = len(eid) // 2
    n_edges = n * (n - 1) // 2
    segs = list(itertools.combinations(range(n), 2))
    cross = [0] * n_edges
    for i, (a, b) in enumerate(segs):
        m = 0
        for j, (c, d) in enumerate(segs):
            if len({a, b, c, d}) == 4 and orient[a, b, c] != orient[a, b, d] \
                    and orient[c, d, a] != orient[c, d, b]:
                m |= 1 << j
        cross[i] = m

    def empty(a, b, c) -> bool:
        # (a, b, c) counterclockwise
        return not any(orient[a, b, p] > 0 and orient[b, c, p] > 0 and orient[c, a, p] > 0
                       for p in range(n) if p != a and p != b and p != c)

    # counterclockwise hull edges: every other point on the left
    hull = {(a, b) for a, b in itertools.permutations(range(n), 2)
            if all(orient[a, b, p] > 0 for p in range(n) if p != a and p != b)}
    apexes = {}
    for a, b in itertools.permutations(range(n), 2):
        apexes[a, b] = [p for p in range(n) if p != a and p != b
                        and orient[a, b, p] > 0 and empty(a, b, p)]

    results: List[Tuple[Tri, ...]] = []
    start = min(hull)

    def rec(open_: frozenset, closed: frozenset, mask: int, tris: tuple):
        if not open_:
            results.append(tuple(sorted(tris)))
            return
        a, b = min(open_)
        for p in apexes[a, b]:
            new_open = set(open_)
            new_open.discard((a, b))
            new_closed = set(closed)
            new_closed.add((a, b))
            m = mask
            ok = True
            for x, y in ((b, p), (p, a)):
                if (x, y) in new_closed:
                    ok = False
                    break
                if (x, y) in new_open:
                    new_open.discard((x, y))
                else:
                    e = eid[x, y]
                    if cross[e] & m:
                        ok = False
                        break
                    m |= 1 << e
                    if (x, y) not in hull:
                        new_open.add((y, x))
                new_closed.add((x, y))
            if ok:
                rec(frozenset(new_open), frozenset(new_closed), m,
                    tris + (tuple(sorted((a, b, p))),))

    rec(frozenset({start}), frozenset(), 1 << eid[start], ())

    order_cache: Dict[Tri, int] = {}

    def tri_order(t: Tri) -> int:
        if t not in order_cache:
            order_cache[t] = count_in_circumcircle(*t, pts)
        return order_cache[t]

    orders = [max(tri_order(t) for t in tris) for tris in results]
    return TriangulationCensus(pts, results, orders)
