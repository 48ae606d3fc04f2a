"""Triangle, triangulation and edge orders.

The useful order of a non-Delaunay edge uv is read off its two witness
triangles: s1 is the point left of v->u whose circle through u and v has no
left point inside, s2 the same on the right, and the useful order is the
larger of the two triangle orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .delaunay import Edge, Triangulation, delaunay_triangulate
from .predicates import (
    DegenerateInputError,
    GridIndex,
    count_in_circumcircle,
    incircle_many,
    incircle_sign,
    orient_many,
    orient_sign,
)

__all__ = [
    "EdgeWitness",
    "triangle_order",
    "triangulation_order",
    "edge_witness",
    "useful_edges",
    "useful_k_edges",
    "iter_strips",
]

EXHAUSTIVE_MAX_N = 200


@dataclass(frozen=True)
class EdgeWitness:
    edge: Edge
    s1: Optional[int]
    s2: Optional[int]
    left_order: Optional[int]
    right_order: Optional[int]

    @property
    def useful_order(self) -> int:
        return max(o for o in (self.left_order, self.right_order) if o is not None)


def triangle_order(t: Sequence[int], points, index: Optional[GridIndex] = None,
                   cutoff: Optional[int] = None) -> int:
    """Number of points strictly inside the circumcircle of triangle ``t``."""
    a, b, c = (int(x) for x in t)
    if len({a, b, c}) != 3:
        raise ValueError(f"triangle {tuple(t)} has repeated vertices")
    return count_in_circumcircle(a, b, c, np.asarray(points, dtype=float), cutoff=cutoff, index=index)


def triangulation_order(T: Triangulation, points=None, index: Optional[GridIndex] = None) -> int:
    """Largest triangle order in ``T``; 0 exactly when T is the Delaunay triangulation."""
    pts = T.points if points is None else np.asarray(points, dtype=float)
    if index is None and len(pts) > 64:
        index = GridIndex(pts)
    return max(triangle_order(t, pts, index) for t in T.triangle_list())


def _max_angle_apex(u: int, v: int, cands: np.ndarray, pts: np.ndarray) -> int:
    """Candidate w maximising angle uwv, i.e. whose circle C(u, v, w) holds no other candidate."""
    P, Q = pts[u], pts[v]
    C = pts[cands]
    ax, ay = P[0] - C[:, 0], P[1] - C[:, 1]
    bx, by = Q[0] - C[:, 0], Q[1] - C[:, 1]
    ang = np.abs(np.arctan2(ax * by - ay * bx, ax * bx + ay * by))
    w = int(cands[int(np.argmax(ang))])
    # float argmax is a guess; exact in-circle tests settle it
    for _ in range(len(cands)):
        s = incircle_many(P, Q, pts[w], C)
        s[cands == w] = -1
        if np.any(s == 0):
            j = int(cands[np.flatnonzero(s == 0)[0]])
            raise DegenerateInputError("four cocircular points", (u, v, w, j))
        inside = np.flatnonzero(s > 0)
        if len(inside) == 0:
            return w
        w = int(cands[inside[np.argmax(ang[inside])]])
    raise AssertionError("witness search did not converge")


def edge_witness(u: int, v: int, points, index: Optional[GridIndex] = None) -> EdgeWitness:
    """Witness triangles and useful order of the segment uv, by scanning every point.

    For a hull-supporting edge one side is empty and the useful order is the
    order of the single witness triangle.
    """
    pts = np.asarray(points, dtype=float)
    if u == v:
        raise ValueError("edge endpoints must differ")
    side = orient_many(pts[v], pts[u], pts)
    side[[u, v]] = 2
    if np.any(side == 0):
        j = int(np.flatnonzero(side == 0)[0])
        raise DegenerateInputError("three collinear points", (u, v, j))
    left = np.flatnonzero(side == 1)
    right = np.flatnonzero(side == -1)
    if len(left) == 0 and len(right) == 0:
        raise DegenerateInputError("edge has no witness on either side", (u, v))
    s1 = _max_angle_apex(u, v, left, pts) if len(left) else None
    s2 = _max_angle_apex(u, v, right, pts) if len(right) else None
    lo = count_in_circumcircle(u, v, s1, pts, index=index) if s1 is not None else None
    ro = count_in_circumcircle(u, v, s2, pts, index=index) if s2 is not None else None
    return EdgeWitness((u, v), s1, s2, lo, ro)


def iter_strips(T: Triangulation, u: int, max_triangles: int, P=None):
    """Walk Delaunay triangle strips out of vertex ``u``.

    Yields ``(v, right_chain, left_chain, n_triangles)`` for every vertex v
    such that the open segment uv crosses the interiors of exactly
    ``n_triangles`` (2 <= n <= max_triangles) Delaunay triangles. The chains
    list the crossed-edge endpoints to the right and left of u->v.
    """
    if P is None:
        P = T.points.tolist()
    own = T._owner
    tri = T._tri
    ux, uy = P[u]
    for ti in T.vertex_triangles()[u]:
        t = tri[ti]
        i = t.index(u)
        a, b = t[(i + 1) % 3], t[(i + 2) % 3]
        # (x, y, R, L, right chain, left chain, triangles so far)
        stack = [(a, b, a, b, (a,), (b,), 1)]
        while stack:
            x, y, R, L, rc, lc, nt = stack.pop()
            far = own.get((y, x))
            if far is None:
                continue
            ft = tri[far]
            c = ft[0] if ft[0] != x and ft[0] != y else (ft[1] if ft[1] != x and ft[1] != y else ft[2])
            nt += 1
            cx, cy = P[c]
            sR = orient_sign(ux, uy, *P[R], cx, cy)
            sL = orient_sign(ux, uy, *P[L], cx, cy)
            if sR == 0 or sL == 0:
                raise DegenerateInputError("three collinear points", (u, R if sR == 0 else L, c))
            if sR > 0 and sL < 0:
                yield c, rc, lc, nt
            if nt >= max_triangles:
                continue
            # sub-edge (x, c): right end x, left end c
            L2 = c if sL < 0 else L
            if orient_sign(ux, uy, *P[R], *P[L2]) > 0:
                stack.append((x, c, R, L2, rc, lc + (c,), nt))
            # sub-edge (c, y)
            R2 = c if sR > 0 else R
            if orient_sign(ux, uy, *P[R2], *P[L]) > 0:
                stack.append((c, y, R2, L, rc + (c,), lc, nt))


def _chain_apex(u: int, v: int, chain: Sequence[int], P) -> int:
    ux, uy = P[u]
    vx, vy = P[v]
    w = chain[0]
    for p in chain[1:]:
        o = orient_sign(ux, uy, vx, vy, *P[w])
        s = incircle_sign(ux, uy, vx, vy, *P[w], *P[p]) * o
        if s == 0:
            raise DegenerateInputError("four cocircular points", (u, v, w, p))
        if s > 0:
            w = p
    return w


def _pruned_useful(T: Triangulation, max_order: int, index: GridIndex) -> Dict[Edge, EdgeWitness]:
    pts = T.points
    P = pts.tolist()
    out: Dict[Edge, EdgeWitness] = {}
    max_tris = 2 * max_order
    for u in range(len(P)):
        for v, rc, lc, _ in iter_strips(T, u, max_tris, P):
            if v < u:
                continue
            # left of v->u is right of u->v
            s1 = _chain_apex(u, v, rc, P)
            lo = count_in_circumcircle(u, v, s1, pts, cutoff=max_order, index=index)
            if lo > max_order:
                continue
            s2 = _chain_apex(u, v, lc, P)
            ro = count_in_circumcircle(u, v, s2, pts, cutoff=max_order, index=index)
            if ro > max_order:
                continue
            out[(u, v)] = EdgeWitness((u, v), s1, s2, lo, ro)
    return out


def _exhaustive_useful(T: Triangulation, max_order: int, index: Optional[GridIndex]) -> Dict[Edge, EdgeWitness]:
    pts = T.points
    n = len(pts)
    out: Dict[Edge, EdgeWitness] = {}
    for u in range(n):
        for v in range(u + 1, n):
            if T.has_edge(u, v):
                continue
            w = edge_witness(u, v, pts, index=index)
            if w.useful_order <= max_order:
                out[(u, v)] = w
    return out


def useful_edges(T: Triangulation, max_order: int, mode: str = "auto",
                 index: Optional[GridIndex] = None) -> Dict[Edge, EdgeWitness]:
    """All non-Delaunay edges with useful order at most ``max_order``.

    Parameters
    ----------
    T : Triangulation
        The Delaunay triangulation of the point set.
    mode : {"auto", "pruned", "exhaustive"}
        "exhaustive" evaluates the witness test on every pair. "pruned" only
        visits pairs whose crossed Delaunay triangles number at most
        ``2 * max_order`` (hull of at most 2k+2 vertices). "auto" is
        exhaustive up to 200 points.
    """
    if max_order < 1:
        return {}
    n = T.n_points
    if index is None:
        index = GridIndex(T.points)
    if mode == "auto":
        mode = "exhaustive" if n <= EXHAUSTIVE_MAX_N else "pruned"
    if mode == "exhaustive":
        return _exhaustive_useful(T, max_order, index)
    if mode == "pruned":
        return _pruned_useful(T, max_order, index)
    raise ValueError(f"unknown mode {mode!r}")


def useful_k_edges(points, k: int, mode: str = "auto", T: Optional[Triangulation] = None,
                   index: Optional[GridIndex] = None) -> List[Tuple[Edge, int]]:
    """Non-Delaunay edges whose useful order is exactly ``k``, sorted by endpoints."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if T is None:
        T = delaunay_triangulate(points)
    found = useful_edges(T, k, mode=mode, index=index)
    return sorted((e, w.useful_order) for e, w in found.items() if w.useful_order == k)
