"""Edge hulls, the greedy disjoint-hull selection, and order-k constructions.

The lower bound for k > 1 picks useful-k edges whose hulls share no
Delaunay triangle; every non-empty subset of the picked edges yields a
distinct order-k triangulation by retriangulating the chosen hulls and
keeping the remaining Delaunay triangles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


from .delaunay import Edge, Triangulation
from .errors import ConstructionError, DegenerateInputError
from .predicates import GridIndex, count_in_circumcircle, orient_sign

__all__ = [
    "EdgeHull",
    "LowerBoundCertificate",
    "HullUndefinedError",
    "lower_bound_constant",
    "edge_hull",
    "select_disjoint_hulls",
    "polygon_triangulations",
    "construct_orderk",
]


class HullUndefinedError(ValueError):
    """The edge is a Delaunay edge, so no Delaunay triangle interior meets it."""


def lower_bound_constant(k: int) -> int:
    """(4k+1)(2k+1)^2 + 1: edges removed per greedy pick, plus the pick."""
    return (4 * k + 1) * (2 * k + 1) ** 2 + 1


@dataclass(frozen=True)
class EdgeHull:
    edge: Edge
    triangles: Tuple[Tuple[int, int, int], ...]
    boundary: Tuple[int, ...]

    @property
    def triangle_set(self) -> frozenset:
        return frozenset(self.triangles)

    @property
    def n_vertices(self) -> int:
        return len(self.boundary)


def edge_hull(e: Edge, T: Triangulation) -> EdgeHull:
    """Strip of Delaunay triangles crossed by the open segment e, walked from e[0] to e[1].

    ``boundary`` is the counterclockwise vertex cycle starting at e[0].
    """
    u, v = int(e[0]), int(e[1])
    if u == v:
        raise ValueError("edge endpoints must differ")
    if T.has_edge(u, v):
        raise HullUndefinedError(f"{(u, v)} is a Delaunay edge")
    P = T.points.tolist()
    ux, uy = P[u]
    vx, vy = P[v]
    start = None
    for ti in T.vertex_triangles()[u]:
        t = T._tri[ti]
        i = t.index(u)
        a, b = t[(i + 1) % 3], t[(i + 2) % 3]
        sa = orient_sign(ux, uy, *P[a], vx, vy)
        sb = orient_sign(ux, uy, *P[b], vx, vy)
        if sa == 0 or sb == 0:
            raise DegenerateInputError("three collinear points", (u, v, a if sa == 0 else b))
        if sa > 0 and sb < 0:
            start = (ti, a, b)
            break
    assert start is not None, "segment leaves the triangulation"
    ti, x, y = start
    tris = [tuple(sorted(T._tri[ti]))]
    right, left = [x], [y]
    while True:
        far = T.owner(y, x)
        assert far is not None, "segment leaves the triangulation"
        tris.append(tuple(sorted(T._tri[far])))
        c = T.apex(y, x)
        if c == v:
            break
        s = orient_sign(ux, uy, vx, vy, *P[c])
        if s == 0:
            raise DegenerateInputError("three collinear points", (u, v, c))
        if s > 0:
            left.append(c)
            y = c
        else:
            right.append(c)
            x = c
    boundary = (u, *right, v, *reversed(left))
    return EdgeHull((u, v), tuple(tris), boundary)


@dataclass
class LowerBoundCertificate:
    k: int
    edges: List[Edge]
    selected: List[Edge]
    hulls: Dict[Edge, EdgeHull] = field(repr=False)

    @property
    def C_k(self) -> int:
        return lower_bound_constant(self.k)

    @property
    def bound(self) -> int:
        return 2 ** len(self.selected) - 1

    @property
    def guaranteed(self) -> float:
        return 2.0 ** (len(self.edges) / self.C_k) - 1.0


def _sq_len(T: Triangulation, e: Edge) -> float:
    p, q = T.points[e[0]], T.points[e[1]]
    return float((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2)


def select_disjoint_hulls(edges: Iterable, T: Triangulation, k: int,
                          presorted: bool = False) -> LowerBoundCertificate:
    """Greedy pick of edges with pairwise triangle-disjoint hulls.

    ``edges`` holds useful-k edges, as ``(u, v)`` or ``((u, v), order)``.
    Unless ``presorted``, they are first ordered by length then endpoints.
    """
    es: List[Edge] = []
    for item in edges:
        e = item[0] if isinstance(item[0], tuple) else item
        es.append((min(e), max(e)))
    if not presorted:
        es.sort(key=lambda e: (_sq_len(T, e), e))
    hulls = {e: edge_hull(e, T) for e in es}
    selected: List[Edge] = []
    used: set = set()
    for e in es:
        ts = hulls[e].triangle_set
        if ts & used:
            continue
        selected.append(e)
        used |= ts
    cert = LowerBoundCertificate(k, es, selected, hulls)
    if cert.bound < cert.guaranteed - 1e-12:
        raise AssertionError("greedy selection fell below the counting guarantee")
    return cert


def _strictly_inside(P, a, b, c, p) -> bool:
    return (orient_sign(*P[a], *P[b], *P[p]) > 0 and orient_sign(*P[b], *P[c], *P[p]) > 0
            and orient_sign(*P[c], *P[a], *P[p]) > 0)


def _proper_cross(P, a, b, c, d) -> bool:
    if len({a, b, c, d}) < 4:
        return False
    return (orient_sign(*P[a], *P[b], *P[c]) * orient_sign(*P[a], *P[b], *P[d]) < 0
            and orient_sign(*P[c], *P[d], *P[a]) * orient_sign(*P[c], *P[d], *P[b]) < 0)


def polygon_triangulations(poly: Sequence[int], P) -> List[Tuple[Tuple[int, int, int], ...]]:
    """All triangulations of a simple counterclockwise polygon given by vertex indices."""
    poly = tuple(poly)

    @lru_cache(maxsize=None)
    def rec(sub: Tuple[int, ...]):
        m = len(sub)
        if m < 3:
            return [()]
        if m == 3:
            return [(tuple(sorted(sub)),)] if orient_sign(*P[sub[0]], *P[sub[1]], *P[sub[2]]) > 0 else []
        a, c = sub[0], sub[-1]
        sides = [(sub[i], sub[(i + 1) % m]) for i in range(m)]
        out = []
        for j in range(1, m - 1):
            b = sub[j]
            if orient_sign(*P[a], *P[b], *P[c]) <= 0:
                continue
            if any(_strictly_inside(P, a, b, c, p) for p in sub if p not in (a, b, c)):
                continue
            new = [(a, b)] if j > 1 else []
            if j < m - 2:
                new.append((b, c))
            if any(_proper_cross(P, x, y, s, t) for x, y in new for s, t in sides):
                continue
            tri = tuple(sorted((a, b, c)))
            for left in rec(sub[:j + 1]):
                for right in rec(sub[j:]):
                    out.append(left + right + (tri,))
        return out

    return rec(poly)


def construct_orderk(T: Triangulation, certificate: LowerBoundCertificate,
                     subset: Iterable[Edge], index: Optional[GridIndex] = None) -> Triangulation:
    """Triangulation containing every edge of ``subset``, with order exactly k.

    Each chosen hull is retriangulated with the lexicographically smallest
    triangulation of the hull polygon that contains the edge and has
    maximum triangle order k (orders counted against all points); all other
    Delaunay triangles are kept.
    """
    chosen = [(min(e), max(e)) for e in subset]
    if not chosen:
        raise ValueError("subset must be non-empty")
    sel = set(certificate.selected)
    for e in chosen:
        if e not in sel:
            raise ValueError(f"{e} is not a selected edge of the certificate")
    k = certificate.k
    pts = T.points
    P = pts.tolist()
    if index is None and len(pts) > 64:
        index = GridIndex(pts)
    cache: Dict[Tuple[int, int, int], int] = {}

    def order(t):
        if t not in cache:
            cache[t] = count_in_circumcircle(*t, pts, index=index)
        return cache[t]

    removed: set = set()
    added: List[Tuple[int, int, int]] = []
    for e in chosen:
        hull = certificate.hulls[e]
        b = hull.boundary
        iv = b.index(e[1]) if b[0] == e[0] else b.index(e[0])
        # split at the diagonal: both halves are simple ccw polygons
        half1, half2 = b[:iv + 1], b[iv:] + (b[0],)
        best = None
        for t1 in polygon_triangulations(half1, P):
            for t2 in polygon_triangulations(half2, P):
                tris = tuple(sorted(t1 + t2))
                mo = max(order(t) for t in tris)
                key = (mo, tris)
                if best is None or key < best:
                    best = key
        if best is None or best[0] != k:
            found = None if best is None else best[0]
            raise ConstructionError(f"no order-{k} triangulation of the hull of {e} (best {found})")
        removed |= hull.triangle_set
        added.extend(best[1])
    tris = [t for t in T.triangle_set() if t not in removed] + added
    return Triangulation(pts, sorted(tris))
