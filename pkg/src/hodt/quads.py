"""Flippable quadrilaterals and the exact count of first order triangulations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple


from .delaunay import Edge, Triangulation, delaunay_triangulate
from .errors import CapExceededError
from .predicates import GridIndex, count_in_circumcircle, orient_sign

__all__ = [
    "FlippableQuad",
    "flippable_quads",
    "count_order1",
    "enumerate_order1",
    "fixed_edges_order1",
    "delaunay_of",
]


def delaunay_of(P) -> Triangulation:
    return P if isinstance(P, Triangulation) else delaunay_triangulate(P)


@dataclass(frozen=True)
class FlippableQuad:
    quad: Tuple[int, int, int, int]  # counterclockwise u, t, v, w
    delaunay_diagonal: Edge
    alternative_diagonal: Edge

    @property
    def boundary(self) -> Tuple[Edge, ...]:
        q = self.quad
        return tuple((q[i], q[(i + 1) % 4]) for i in range(4))


def flippable_quads(P, index: Optional[GridIndex] = None) -> List[FlippableQuad]:
    """Quadrilaterals of two Delaunay triangles whose other diagonal also gives order <= 1 triangles.

    ``P`` is a point array or its Delaunay triangulation. Quads are returned
    sorted by their Delaunay diagonal.
    """
    T = delaunay_of(P)
    pts = T.points
    if index is None and len(pts) > 64:
        index = GridIndex(pts)
    out = []
    for u, v in T.interior_edges():
        w = T.apex(u, v)
        t = T.apex(v, u)
        if orient_sign(*pts[w], *pts[t], *pts[u]) * orient_sign(*pts[w], *pts[t], *pts[v]) >= 0:
            continue
        if count_in_circumcircle(u, t, w, pts, cutoff=1, index=index) > 1:
            continue
        if count_in_circumcircle(t, v, w, pts, cutoff=1, index=index) > 1:
            continue
        out.append(FlippableQuad((u, t, v, w), (u, v), (min(w, t), max(w, t))))
    return out


def count_order1(P) -> Tuple[int, int]:
    """Return ``(q, 2**q)``: flippable quads and the number of order-1 triangulations."""
    q = len(flippable_quads(P))
    return q, 2 ** q


def enumerate_order1(P, cap: int = 30) -> Iterator[Triangulation]:
    """Yield every order-1 Delaunay triangulation once, by flipping subsets of quads.

    Subsets are visited in increasing bitmask order, so the Delaunay
    triangulation comes first.
    """
    T = delaunay_of(P)
    quads = flippable_quads(T)
    q = len(quads)
    if q > cap:
        raise CapExceededError(f"{q} flippable quadrilaterals exceed the cap of {cap}")
    for mask in range(2 ** q):
        out = T.copy()
        for i, quad in enumerate(quads):
            if mask >> i & 1:
                out.flip(*quad.delaunay_diagonal)
        yield out


def fixed_edges_order1(P) -> List[Edge]:
    """Delaunay edges present in every order-1 triangulation."""
    T = delaunay_of(P)
    diag = {quad.delaunay_diagonal for quad in flippable_quads(T)}
    return [e for e in T.edges() if e not in diag]
