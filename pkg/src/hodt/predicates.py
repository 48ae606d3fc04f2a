"""Exact planar predicates.

Orientation and in-circle signs are computed with a floating-point filter
(Shewchuk's static error bounds) and fall back to exact integer arithmetic
when the filter cannot certify the sign. Every classification made by this
module is therefore exact for finite double-precision inputs.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "DegenerateInputError",
    "Orientation",
    "Containment",
    "Circle",
    "orient",
    "orient_sign",
    "in_circle",
    "incircle_sign",
    "circumcircle",
    "orient_many",
    "incircle_many",
    "GridIndex",
    "count_in_circumcircle",
]

_EPS = 2.0 ** -53
ORIENT_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
INCIRCLE_ERRBOUND = (10.0 + 96.0 * _EPS) * _EPS
# below this magnitude products may have underflowed; go exact
_TINY = 1e-280


class DegenerateInputError(ValueError):
    """Input violates general position (collinear triple or cocircular quadruple).

    ``indices`` holds the offending point indices (or coordinates when the
    points were passed without an index).
    """

    def __init__(self, message: str, indices: Sequence = ()):
        super().__init__(message)
        self.indices = tuple(indices)


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Containment(enum.IntEnum):
    OUTSIDE = -1
    ON = 0
    INSIDE = 1


@dataclass(frozen=True)
class Circle:
    center: tuple[float, float]
    radius_squared: float

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_squared)


def _to_ints(values: Iterable[float]) -> list[int]:
    """Scale dyadic rationals to integers sharing one power-of-two denominator."""
    ratios = [float(v).as_integer_ratio() for v in values]
    den = max(d for _, d in ratios)
    return [num * (den // d) for num, d in ratios]


def _orient_exact(ax, ay, bx, by, cx, cy) -> int:
    ax, ay, bx, by, cx, cy = _to_ints((ax, ay, bx, by, cx, cy))
    det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return (det > 0) - (det < 0)


def orient_sign(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> int:
    """Sign of twice the signed area of triangle (a, b, c): +1 ccw, -1 cw, 0 collinear."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    errbound = ORIENT_ERRBOUND * (abs(detleft) + abs(detright))
    if abs(det) > errbound and abs(det) > _TINY:
        return 1 if det > 0 else -1
    return _orient_exact(ax, ay, bx, by, cx, cy)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    ax, ay, bx, by, cx, cy, dx, dy = _to_ints((ax, ay, bx, by, cx, cy, dx, dy))
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (alift * (bdx * cdy - cdx * bdy)
           + blift * (cdx * ady - adx * cdy)
           + clift * (adx * bdy - bdx * ady))
    return (det > 0) - (det < 0)


def incircle_sign(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    """Raw in-circle determinant sign.

    Positive when d lies inside the circle through a, b, c and (a, b, c) is
    counterclockwise. The sign flips with the orientation of (a, b, c).
    """
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy
    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    errbound = INCIRCLE_ERRBOUND * permanent
    if abs(det) > errbound and abs(det) > _TINY:
        return 1 if det > 0 else -1
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)


def orient(p, q, r) -> Orientation:
    """Exact orientation of the point triple (p, q, r)."""
    return Orientation(orient_sign(p[0], p[1], q[0], q[1], r[0], r[1]))


def in_circle(a, b, c, p) -> Containment:
    """Classify ``p`` against the open disk bounded by the circumcircle of (a, b, c).

    The answer does not depend on the cyclic order or orientation of a, b, c.

    Raises
    ------
    DegenerateInputError
        If a, b, c are collinear.
    """
    o = orient_sign(a[0], a[1], b[0], b[1], c[0], c[1])
    if o == 0:
        raise DegenerateInputError("circumcircle of collinear points", (a, b, c))
    s = incircle_sign(a[0], a[1], b[0], b[1], c[0], c[1], p[0], p[1])
    return Containment(s * o)


def circumcircle(a, b, c) -> Circle:
    """Circumcircle of a non-degenerate triangle (floating point, for reporting)."""
    if orient_sign(a[0], a[1], b[0], b[1], c[0], c[1]) == 0:
        raise DegenerateInputError("circumcircle of collinear points", (a, b, c))
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Circle((a[0] + ux, a[1] + uy), ux * ux + uy * uy)


def orient_many(a, b, pts: np.ndarray) -> np.ndarray:
    """Exact orientation signs of (a, b, p) for every row p of ``pts``."""
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    cx, cy = pts[:, 0], pts[:, 1]
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    errbound = ORIENT_ERRBOUND * (np.abs(detleft) + np.abs(detright))
    sign = np.sign(det).astype(np.int64)
    unsure = ~((np.abs(det) > errbound) & (np.abs(det) > _TINY))
    for i in np.flatnonzero(unsure):
        sign[i] = _orient_exact(ax, ay, bx, by, cx[i], cy[i])
    return sign


def incircle_many(a, b, c, pts: np.ndarray) -> np.ndarray:
    """Orientation-normalised containment of each row of ``pts`` (+1 in, 0 on, -1 out)."""
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    cx, cy = float(c[0]), float(c[1])
    o = orient_sign(ax, ay, bx, by, cx, cy)
    if o == 0:
        raise DegenerateInputError("circumcircle of collinear points", (a, b, c))
    dx, dy = pts[:, 0], pts[:, 1]
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    cdxady = cdx * ady
    adxcdy = adx * cdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((np.abs(bdxcdy) + np.abs(cdxbdy)) * alift
                 + (np.abs(cdxady) + np.abs(adxcdy)) * blift
                 + (np.abs(adxbdy) + np.abs(bdxady)) * clift)
    sign = np.sign(det).astype(np.int64)
    unsure = ~((np.abs(det) > INCIRCLE_ERRBOUND * permanent) & (np.abs(det) > _TINY))
    for i in np.flatnonzero(unsure):
        sign[i] = _incircle_exact(ax, ay, bx, by, cx, cy, dx[i], dy[i])
    return sign * o


class GridIndex:
    """Uniform bucket grid over a fixed point array.

    Cells have side about ``extent / sqrt(n)``; the index only proposes
    candidates and never decides containment itself. Immutable once built.
    """

    def __init__(self, points: np.ndarray, cells_per_side: Optional[int] = None):
        pts = np.asarray(points, dtype=float)
        self.points = pts
        n = len(pts)
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        extent = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-300))
        m = cells_per_side or max(1, int(math.ceil(math.sqrt(n))))
        self.m = m
        self.origin = lo
        self.cell = extent / m
        ij = np.minimum(((pts - lo) / self.cell).astype(np.int64), m - 1)
        keys = ij[:, 1] * m + ij[:, 0]
        order = np.argsort(keys, kind="stable")
        self._order = order
        counts = np.bincount(keys, minlength=m * m)
        self._start = np.concatenate([[0], np.cumsum(counts)])

    def candidates(self, cx: float, cy: float, r: float) -> np.ndarray:
        """Indices of points in cells meeting the square of half-side ``r`` about (cx, cy)."""
        m, cell = self.m, self.cell
        ox, oy = self.origin
        # pad by one cell against rounding of the circumradius
        i0 = max(int(math.floor((cx - r - ox) / cell)) - 1, 0)
        i1 = min(int(math.floor((cx + r - ox) / cell)) + 1, m - 1)
        j0 = max(int(math.floor((cy - r - oy) / cell)) - 1, 0)
        j1 = min(int(math.floor((cy + r - oy) / cell)) + 1, m - 1)
        if i0 > i1 or j0 > j1:
            return np.empty(0, dtype=np.int64)
        start = self._start
        parts = [self._order[start[j * m + i0]:start[j * m + i1 + 1]] for j in range(j0, j1 + 1)]
        return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def count_in_circumcircle(
    a: int,
    b: int,
    c: int,
    points: np.ndarray,
    cutoff: Optional[int] = None,
    index: Optional[GridIndex] = None,
    on_circle: str = "raise",
) -> int:
    """Number of points strictly inside the circumcircle of points[a], points[b], points[c].

    The three vertices themselves are never counted. With ``cutoff`` the
    scan may stop once more than ``cutoff`` interior points are confirmed,
    returning some value greater than ``cutoff``.

    Parameters
    ----------
    on_circle : {"raise", "ignore"}
        What to do when another point lies exactly on the circle.
    """
    pts = points
    A, B, C = pts[a], pts[b], pts[c]
    if index is not None:
        circ = circumcircle(A, B, C)
        r = math.sqrt(circ.radius_squared) * (1.0 + 1e-6)
        cand = index.candidates(circ.center[0], circ.center[1], r)
    else:
        cand = np.arange(len(pts))
    cand = cand[(cand != a) & (cand != b) & (cand != c)]
    if cutoff is not None and len(cand) > 64:
        total = 0
        for lo in range(0, len(cand), 64):
            chunk = cand[lo:lo + 64]
            total += _count_chunk(A, B, C, pts, chunk, on_circle, (a, b, c))
            if total > cutoff:
                return total
        return total
    return _count_chunk(A, B, C, pts, cand, on_circle, (a, b, c))


def _count_chunk(A, B, C, pts, cand, on_circle, tri) -> int:
    if len(cand) == 0:
        return 0
    s = incircle_many(A, B, C, pts[cand])
    if on_circle == "raise" and np.any(s == 0):
        j = int(cand[np.flatnonzero(s == 0)[0]])
        raise DegenerateInputError("four cocircular points", (*tri, j))
    return int(np.count_nonzero(s > 0))
