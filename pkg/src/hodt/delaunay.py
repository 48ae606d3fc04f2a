"""Index-based planar triangulations and the Delaunay triangulation.

A :class:`Triangulation` stores counterclockwise vertex triples over an
immutable point array. Adjacency is kept as a map from directed edges to the
triangle on their left, so the triangle across ``(a, b)`` is the owner of
``(b, a)``.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .predicates import (
    DegenerateInputError,
    ORIENT_ERRBOUND,
    _orient_exact,
    incircle_sign,
    orient_sign,
)

__all__ = [
    "Edge",
    "Triangulation",
    "TriangulationError",
    "BoundaryEdgeError",
    "NonConvexQuadError",
    "as_points",
    "delaunay_triangulate",
    "flip_diagonal",
    "hop_distance",
]

Edge = Tuple[int, int]


class TriangulationError(ValueError):
    pass


class BoundaryEdgeError(TriangulationError):
    pass


class NonConvexQuadError(TriangulationError):
    pass


def as_points(points) -> np.ndarray:
    """Validate and freeze an (n, 2) float array of finite coordinates."""
    pts = np.array(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("point coordinates must be finite")
    pts.setflags(write=False)
    return pts


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Triangulation:
    """A triangulation of the convex hull of ``points``.

    Parameters
    ----------
    points : array_like, shape (n, 2)
    triangles : iterable of vertex triples
        Orientation is normalised to counterclockwise with exact predicates.
    validate : bool
        Check the tiling invariants (see :meth:`validate`).
    """

    def __init__(self, points, triangles: Iterable[Sequence[int]], validate: bool = True):
        self.points = points if isinstance(points, np.ndarray) and not points.flags.writeable \
            else as_points(points)
        pts = self.points
        tris: List[List[int]] = []
        for t in triangles:
            a, b, c = (int(x) for x in t)
            o = orient_sign(*pts[a], *pts[b], *pts[c])
            if o == 0:
                raise DegenerateInputError("collinear triangle", (a, b, c))
            tris.append([a, b, c] if o > 0 else [a, c, b])
        self._tri = tris
        self._owner: Dict[Edge, int] = {}
        for i, (a, b, c) in enumerate(tris):
            for e in ((a, b), (b, c), (c, a)):
                if e in self._owner:
                    raise TriangulationError(f"directed edge {e} used twice")
                self._owner[e] = i
        self._vtri: Optional[List[List[int]]] = None
        if validate:
            self.validate()

    # -- basic accessors -------------------------------------------------
    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def triangles(self) -> np.ndarray:
        return np.array(self._tri, dtype=np.int64).reshape(-1, 3)

    def __len__(self) -> int:
        return len(self._tri)

    def triangle(self, i: int) -> Tuple[int, int, int]:
        return tuple(self._tri[i])

    def triangle_list(self) -> List[Tuple[int, int, int]]:
        return [tuple(t) for t in self._tri]

    def triangle_set(self) -> frozenset:
        """Canonical form: set of sorted vertex triples."""
        return frozenset(tuple(sorted(t)) for t in self._tri)

    def copy(self) -> "Triangulation":
        new = Triangulation.__new__(Triangulation)
        new.points = self.points
        new._tri = [list(t) for t in self._tri]
        new._owner = dict(self._owner)
        new._vtri = None
        return new

    def owner(self, a: int, b: int) -> Optional[int]:
        """Index of the triangle having the directed edge a->b, if any."""
        return self._owner.get((a, b))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._owner or (v, u) in self._owner

    def edges(self) -> List[Edge]:
        return sorted({_key(a, b) for (a, b) in self._owner})

    def interior_edges(self) -> List[Edge]:
        return sorted({_key(a, b) for (a, b) in self._owner if (b, a) in self._owner})

    def boundary_edges(self) -> List[Edge]:
        """Directed hull edges, counterclockwise (interior on the left)."""
        return sorted(e for e in self._owner if (e[1], e[0]) not in self._owner)

    def hull_vertices(self) -> List[int]:
        nxt = {a: b for a, b in self.boundary_edges()}
        start = min(nxt)
        cyc = [start]
        v = nxt[start]
        while v != start:
            cyc.append(v)
            v = nxt[v]
        return cyc

    def neighbors(self) -> np.ndarray:
        """neighbors[t, i]: triangle across the edge opposite vertex i, or -1."""
        out = np.full((len(self._tri), 3), -1, dtype=np.int64)
        for i, (a, b, c) in enumerate(self._tri):
            for j, (x, y) in enumerate(((b, c), (c, a), (a, b))):
                out[i, j] = self._owner.get((y, x), -1)
        return out

    def apex(self, a: int, b: int) -> Optional[int]:
        """Third vertex of the triangle on the left of a->b."""
        t = self._owner.get((a, b))
        if t is None:
            return None
        tri = self._tri[t]
        for x in tri:
            if x != a and x != b:
                return x
        raise AssertionError("unreachable")

    def vertex_triangles(self) -> List[List[int]]:
        if self._vtri is None:
            vt: List[List[int]] = [[] for _ in range(self.n_points)]
            for i, t in enumerate(self._tri):
                for x in t:
                    vt[x].append(i)
            self._vtri = vt
        return self._vtri

    def vertex_neighbors(self) -> List[List[int]]:
        nb: List[set] = [set() for _ in range(self.n_points)]
        for a, b in self._owner:
            nb[a].add(b)
            nb[b].add(a)
        return [sorted(s) for s in nb]

    # -- invariants ------------------------------------------------------
    def validate(self) -> None:
        """Raise :class:`TriangulationError` unless the triangles tile the convex hull."""
        pts = self.points
        n = len(pts)
        used = {x for t in self._tri for x in t}
        if len(used) != n:
            missing = sorted(set(range(n)) - used)
            raise TriangulationError(f"points not used as vertices: {missing[:10]}")
        bnd = self.boundary_edges()
        nxt: Dict[int, int] = {}
        for a, b in bnd:
            if a in nxt:
                raise TriangulationError(f"boundary is not a simple cycle at vertex {a}")
            nxt[a] = b
        cyc = self.hull_vertices()
        if len(cyc) != len(bnd):
            raise TriangulationError("boundary is not a single cycle")
        h = len(cyc)
        for a, b in bnd:
            s = _orient_all(pts[a], pts[b], pts)
            s[[a, b]] = 1
            if np.any(s <= 0):
                raise TriangulationError(f"boundary edge {(a, b)} is not a convex hull edge")
        if len(self._tri) != 2 * n - h - 2:
            raise TriangulationError(
                f"Euler check failed: {len(self._tri)} triangles, expected {2 * n - h - 2}")
        if len(self.edges()) != 3 * n - h - 3:
            raise TriangulationError("Euler check failed on edge count")

    # -- flips -----------------------------------------------------------
    def flip(self, u: int, v: int) -> Edge:
        """Replace interior edge uv by the other diagonal of its quadrilateral; in place."""
        i1 = self._owner.get((u, v))
        i2 = self._owner.get((v, u))
        if i1 is None and i2 is None:
            raise TriangulationError(f"{(u, v)} is not an edge")
        if i1 is None or i2 is None:
            raise BoundaryEdgeError(f"{(u, v)} is a boundary edge")
        w = self.apex(u, v)
        t = self.apex(v, u)
        pts = self.points
        if orient_sign(*pts[w], *pts[t], *pts[u]) * orient_sign(*pts[w], *pts[t], *pts[v]) >= 0:
            raise NonConvexQuadError(f"quadrilateral around {(u, v)} is not convex")
        self._flip_raw(u, v, w, t, i1, i2)
        return (w, t)

    def _flip_raw(self, u, v, w, t, i1, i2) -> None:
        # quad u, t, v, w is counterclockwise
        own = self._owner
        del own[(u, v)], own[(v, u)]
        self._tri[i1] = [u, t, w]
        self._tri[i2] = [t, v, w]
        own[(u, t)] = i1
        own[(t, w)] = i1
        own[(w, u)] = i1
        own[(t, v)] = i2
        own[(v, w)] = i2
        own[(w, t)] = i2
        self._vtri = None


def flip_diagonal(T: Triangulation, e: Edge, copy: bool = False):
    """Flip the interior edge ``e``.

    Returns the new edge, or ``(new_triangulation, new_edge)`` when ``copy``.
    """
    target = T.copy() if copy else T
    new = target.flip(*e)
    return (target, new) if copy else new


def _orient_all(a, b, pts: np.ndarray) -> np.ndarray:
    from .predicates import orient_many
    return orient_many(a, b, pts)


def _check_distinct(pts: np.ndarray) -> None:
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    s = pts[order]
    dup = np.flatnonzero(np.all(s[1:] == s[:-1], axis=1))
    if len(dup):
        raise DegenerateInputError("duplicate points", (int(order[dup[0]]), int(order[dup[0] + 1])))


def _legalize(T: Triangulation, stack: Optional[List[Edge]] = None) -> int:
    """Lawson flips until every interior edge is locally Delaunay. Returns flip count."""
    pts = T.points
    own = T._owner
    if stack is None:
        stack = T.interior_edges()
    flips = 0
    while stack:
        u, v = stack.pop()
        i1 = own.get((u, v))
        i2 = own.get((v, u))
        if i1 is None or i2 is None:
            continue
        w = T.apex(u, v)
        t = T.apex(v, u)
        s = incircle_sign(*pts[u], *pts[v], *pts[w], *pts[t])
        if s == 0:
            raise DegenerateInputError("four cocircular points", (u, v, w, t))
        if s > 0:
            T._flip_raw(u, v, w, t, i1, i2)
            flips += 1
            stack.extend(((u, t), (t, v), (v, w), (w, u)))
    return flips


def _sweep_triangulation(pts: np.ndarray) -> List[List[int]]:
    """Lexicographic sweep triangulation built with exact orientation tests."""
    order = [int(i) for i in np.lexsort((pts[:, 1], pts[:, 0]))]
    a, b, c = order[0], order[1], order[2]
    s = orient_sign(*pts[a], *pts[b], *pts[c])
    if s == 0:
        raise DegenerateInputError("collinear points", (a, b, c))
    if s > 0:
        hull = [a, b, c]
    else:
        hull = [a, c, b]
    tris = [list(hull)]
    for p in order[3:]:
        px, py = pts[p]
        h = len(hull)
        vis = []
        for i in range(h):
            x, y = hull[i], hull[(i + 1) % h]
            s = orient_sign(*pts[x], *pts[y], px, py)
            if s == 0:
                raise DegenerateInputError("collinear points", (x, y, p))
            vis.append(s < 0)
        for i in range(h):
            if vis[i]:
                tris.append([hull[(i + 1) % h], hull[i], p])
        # visible edges form one run; rotate so it does not wrap
        k = next(i for i in range(h) if vis[i] and not vis[i - 1])
        hull = hull[k:] + hull[:k]
        vis = vis[k:] + vis[:k]
        last = max(i for i in range(h) if vis[i])
        hull = [hull[0], p] + hull[last + 1:]
    return tris


def _qhull_triangulation(pts: np.ndarray) -> Optional[List[List[int]]]:
    from scipy.spatial import Delaunay, QhullError
    try:
        d = Delaunay(pts)
    except QhullError:
        return None
    if len(getattr(d, "coplanar", [])):
        return None
    simp = np.asarray(d.simplices, dtype=np.int64)
    a, b, c = pts[simp[:, 0]], pts[simp[:, 1]], pts[simp[:, 2]]
    detleft = (a[:, 0] - c[:, 0]) * (b[:, 1] - c[:, 1])
    detright = (a[:, 1] - c[:, 1]) * (b[:, 0] - c[:, 0])
    det = detleft - detright
    sure = np.abs(det) > ORIENT_ERRBOUND * (np.abs(detleft) + np.abs(detright))
    sign = np.sign(det).astype(np.int64)
    for i in np.flatnonzero(~sure):
        sign[i] = _orient_exact(*a[i], *b[i], *c[i])
    if np.any(sign == 0):
        return None
    flip = sign < 0
    simp[flip] = simp[flip][:, [0, 2, 1]]
    return simp.tolist()


def delaunay_triangulate(points, method: str = "auto") -> Triangulation:
    """Delaunay triangulation of a point set in general position.

    Parameters
    ----------
    method : {"auto", "qhull", "sweep"}
        "auto" seeds from Qhull and falls back to the sweep when the Qhull
        mesh fails exact validation. Either way the result is legalised with
        exact in-circle tests, so the output is exactly Delaunay.

    Raises
    ------
    DegenerateInputError
        Duplicate or all-collinear points, a collinear hull triple, or a
        cocircular quadruple met during legalisation.
    """
    pts = as_points(points)
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    _check_distinct(pts)
    T = None
    if method in ("auto", "qhull"):
        tris = _qhull_triangulation(pts)
        if tris is not None:
            try:
                T = Triangulation(pts, tris, validate=True)
            except (TriangulationError, DegenerateInputError):
                T = None
        if T is None and method == "qhull":
            raise TriangulationError("Qhull output failed exact validation")
    if T is None:
        T = Triangulation(pts, _sweep_triangulation(pts), validate=True)
    _legalize(T)
    return T


def hop_distance(T: Triangulation, u: int, v: int, limit: int) -> Optional[int]:
    """Breadth-first graph distance between u and v in the edge graph of T.

    Returns None when the distance exceeds ``limit``.
    """
    if u == v:
        return 0
    nb = T.vertex_neighbors()
    seen = {u}
    frontier = [u]
    for d in range(1, limit + 1):
        nxt = []
        for x in frontier:
            for y in nb[x]:
                if y == v:
                    return d
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    return None
