"""Point-set generators: uniform samples and the two extremal constructions.

``gen_only1`` builds a set whose Delaunay triangulation is its only order-k
triangulation for every k <= n // 3 - 1. ``gen_maxfodt`` builds a set with
n - 3 flippable quadrilaterals, i.e. 2^(n-3) order-1 triangulations.

Both constructions start from nearly degenerate coordinates and apply a
small seeded perturbation, then audit the result with exact predicates.
If the audit fails the perturbation is halved and the draw repeated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.spatial.distance import pdist

from .delaunay import Triangulation, as_points, delaunay_triangulate
from .errors import ConstructionError, DegenerateInputError
from .orders import useful_edges
from .predicates import Containment, in_circle, incircle_sign, orient_sign
from .quads import flippable_quads

__all__ = [
    "GeneratorSpec",
    "Only1Layout",
    "gen_uniform",
    "gen_only1",
    "gen_maxfodt",
    "only1_layout",
    "audit_general_position",
    "generate",
]

KINDS = ("only1", "maxfodt", "uniform")
MAX_RETRIES = 40

# Layout of the single-triangulation construction. C_p is the unit circle;
# angles are in radians. Found by a parameter search and validated for
# every n in 6..39 and n in {45, 60, 90, 120, 150} under perturbation.
_ONLY1 = dict(
    p_start=0.524,   # first p sits this far counterclockwise of s3 (at the top)
    p_span=0.765,    # angular extent of the p arc
    s1=(0.165, -1.88),   # polar (radius, angle) of s1, inside C_p
    s2=(0.419, -0.498),  # polar position of s2, inside C_p
    q_turn=-0.351,   # C_q centre direction, relative to the s3 -> p-centroid ray
    q_radius=2.42,
    q_span=0.005,    # arc length occupied by the q cluster
    r_turn=0.599,
    r_radius=1.78,
    r_span=0.02,
)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one generator call.

    ``epsilon`` is the perturbation magnitude as a fraction of the local
    feature size; ``None`` selects the generator default.
    """

    kind: str
    n: int
    k: Optional[int] = None
    seed: int = 0
    epsilon: Optional[float] = None

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if self.epsilon is not None and not (self.epsilon > 0):
            raise ValueError("epsilon must be positive")
        n = self.n
        if self.kind == "uniform":
            if n < 3:
                raise ValueError("uniform requires n >= 3")
        elif self.kind == "maxfodt":
            if n < 8 or n % 4:
                raise ValueError("maxfodt requires n >= 8 and n divisible by 4")
        else:
            if n < 6:
                raise ValueError("only1 requires n >= 6")
            kmax = n // 3 - 1
            k = 1 if self.k is None else self.k
            if not 1 <= k <= kmax:
                raise ValueError(f"only1 with n={n} requires 1 <= k <= {kmax}")

    def generate(self) -> np.ndarray:
        self.validate()
        kw = {} if self.epsilon is None else {"epsilon": self.epsilon}
        if self.kind == "uniform":
            return gen_uniform(self.n, self.seed)
        if self.kind == "maxfodt":
            return gen_maxfodt(self.n, self.seed, **kw)
        return gen_only1(self.n, 1 if self.k is None else self.k, self.seed, **kw)


def generate(spec: GeneratorSpec) -> np.ndarray:
    return spec.generate()


def gen_uniform(n: int, seed: int = 0) -> np.ndarray:
    """``n`` points uniform in the unit square."""
    if n < 3:
        raise ValueError("uniform requires n >= 3")
    return np.random.default_rng(seed).random((n, 2))


def _disk_noise(rng: np.random.Generator, n: int, radius: float) -> np.ndarray:
    r = radius * np.sqrt(rng.random(n))
    t = rng.uniform(0.0, 2.0 * math.pi, n)
    return np.column_stack([r * np.cos(t), r * np.sin(t)])


def _sagitta(a, b, c) -> float:
    """Distance of b from the line through a and c."""
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return abs(cross) / math.hypot(c[0] - a[0], c[1] - a[1])


# ---------------------------------------------------------------- maxfodt

def _maxfodt_base(n: int) -> np.ndarray:
    # Concentric axis-aligned squares, half-sides 1, 2, 4, ... Each band
    # between consecutive squares splits into four isosceles trapezoids,
    # which are cyclic, and doubling keeps their circles free of other points.
    rings = []
    for i in range(n // 4):
        h = 2.0 ** i
        rings += [(h, h), (-h, h), (-h, -h), (h, -h)]
    return np.array(rings, dtype=float)


def gen_maxfodt(n: int, seed: int = 0, epsilon: float = 1e-3,
                max_retries: int = MAX_RETRIES) -> np.ndarray:
    """Point set with exactly n - 3 flippable quadrilaterals.

    Raises
    ------
    ValueError
        If ``n`` is not a multiple of 4 or is below 8.
    ConstructionError
        If no perturbation passes the audit within ``max_retries`` halvings.
    """
    GeneratorSpec("maxfodt", n, epsilon=epsilon).validate()
    base = _maxfodt_base(n)
    scale = float(pdist(base).min()) / 4.0
    rng = np.random.default_rng(seed)
    eps = epsilon
    for _ in range(max_retries):
        pts = base + _disk_noise(rng, n, eps * scale)
        try:
            if len(flippable_quads(pts)) == n - 3:
                return pts
        except DegenerateInputError:
            pass
        eps /= 2.0
    raise ConstructionError(f"maxfodt audit failed after {max_retries} perturbation attempts")


# ---------------------------------------------------------------- only1

@dataclass
class Only1Layout:
    """Labelled output of the single-triangulation construction.

    ``groups`` maps "s1", "s2", "s3", "p", "q", "r" to index arrays into
    ``points``; ``circles`` maps "p", "q", "r" to the nominal (centre,
    radius) of C_p, C_q and C_r.
    """

    points: np.ndarray
    k_max: int
    groups: Dict[str, np.ndarray] = field(repr=False)
    circles: Dict[str, Tuple[Tuple[float, float], float]] = field(repr=False)
    epsilon: float = 0.0

    def group(self, name: str) -> np.ndarray:
        return self.points[self.groups[name]]

    def property_checks(self) -> Dict[str, bool]:
        """The three containment properties, evaluated exactly."""
        g = self.group
        s1, s2, s3 = g("s1")[0], g("s2")[0], g("s3")[0]
        p1 = g("p")[0]
        inside = Containment.INSIDE
        return {
            "C_p contains s2 and r": all(_in_disk(self.circles["p"], x) for x in [s2, *g("r")]),
            "C_q and C_r contain p": all(_in_disk(self.circles["q"], x) and _in_disk(self.circles["r"], x)
                                         for x in g("p")),
            "C(s1,s2,p1) contains s3 and q": all(in_circle(s1, s2, p1, x) == inside for x in [s3, *g("q")]),
        }


def _in_disk(circle, x) -> bool:
    (cx, cy), r = circle
    dx = Fraction(float(x[0])) - Fraction(cx)
    dy = Fraction(float(x[1])) - Fraction(cy)
    return dx * dx + dy * dy < Fraction(r) ** 2


def _polar(r: float, a: float) -> np.ndarray:
    return np.array([r * math.cos(a), r * math.sin(a)])


def _arc_from(center: np.ndarray, start: np.ndarray, span: float, count: int) -> Tuple[list, float]:
    """``count`` points on the circle about ``center`` through ``start``, stepping away from it."""
    radius = float(np.hypot(*(start - center)))
    base = math.atan2(start[1] - center[1], start[0] - center[0])
    step = span / radius / max(count, 1)
    return [center + _polar(radius, base + step * (j + 1)) for j in range(count)], radius


def _only1_base(n: int):
    L = _ONLY1
    K = n // 3 - 1
    m = n - 2 * K - 2
    ang = math.pi / 2 + L["p_start"] + np.linspace(0.0, L["p_span"], m)
    p = np.column_stack([np.cos(ang), np.sin(ang)])
    s3 = _polar(1.0, math.pi / 2)
    s1 = _polar(*L["s1"])
    s2 = _polar(*L["s2"])
    pc = p.mean(axis=0)

    def toward_p(src):
        return math.atan2(pc[1] - src[1], pc[0] - src[0])

    cq = s3 + _polar(L["q_radius"], toward_p(s3) + L["q_turn"])
    q, rq = _arc_from(cq, s3, L["q_span"], K)
    cr = s2 + _polar(L["r_radius"], toward_p(s2) + L["r_turn"])
    r, rr = _arc_from(cr, s2, L["r_span"], K - 1)
    pts = np.vstack([s1, s2, s3, p] + q + r) if K > 1 else np.vstack([s1, s2, s3, p] + q)
    idx = np.arange(n)
    groups = {
        "s1": idx[0:1], "s2": idx[1:2], "s3": idx[2:3],
        "p": idx[3:3 + m], "q": idx[3 + m:3 + m + K], "r": idx[3 + m + K:],
    }
    circles = {"p": ((0.0, 0.0), 1.0), "q": (tuple(map(float, cq)), rq), "r": (tuple(map(float, cr)), rr)}
    chains = [np.vstack([s3, *q]), np.vstack([s2, *r]) if K > 1 else s2[None]]
    feature = float(pdist(pts).min())
    for c in chains:
        for i in range(len(c) - 2):
            feature = min(feature, _sagitta(c[i], c[i + 1], c[i + 2]))
    return pts, K, groups, circles, feature


def only1_layout(n: int, k: int = 1, seed: int = 0, epsilon: float = 0.1,
                 max_retries: int = MAX_RETRIES) -> Only1Layout:
    """The labelled single-triangulation construction.

    The layout is always built for the largest admissible order
    ``n // 3 - 1``; a set with a unique order-K triangulation has a unique
    order-k one for every k <= K. Remainder points beyond a multiple of 3
    go to the p group.

    ``epsilon`` scales the perturbation relative to the local feature size,
    the smaller of the minimum pairwise distance and the bow of the q and r
    arcs. The audit checks the three containment properties and that no
    non-Delaunay edge has useful order <= n // 3 - 1.
    """
    GeneratorSpec("only1", n, k, seed, epsilon).validate()
    base, K, groups, circles, feature = _only1_base(n)
    rng = np.random.default_rng(seed)
    eps = epsilon
    for _ in range(max_retries):
        pts = base + _disk_noise(rng, n, eps * feature / 4.0)
        out = Only1Layout(pts, K, groups, circles, eps)
        try:
            if all(out.property_checks().values()):
                T = delaunay_triangulate(pts)
                if not useful_edges(T, K, mode="pruned"):
                    return out
        except DegenerateInputError:
            pass
        eps /= 2.0
    raise ConstructionError(f"only1 audit failed after {max_retries} perturbation attempts")


def gen_only1(n: int, k: int = 1, seed: int = 0, epsilon: float = 0.1,
              max_retries: int = MAX_RETRIES) -> np.ndarray:
    """Points whose only order-k Delaunay triangulation is the Delaunay triangulation."""
    return only1_layout(n, k, seed, epsilon, max_retries).points


# ---------------------------------------------------------------- audits

def audit_general_position(points, seed: int = 0, sample: int = 2000,
                           T: Optional[Triangulation] = None) -> None:
    """Raise :class:`DegenerateInputError` on a detected degeneracy.

    Checks a random sample of triples plus every triple of consecutive hull
    vertices for collinearity, and every pair of adjacent Delaunay
    triangles for four cocircular points.
    """
    pts = as_points(points)
    n = len(pts)
    if T is None:
        T = delaunay_triangulate(pts)
    P = pts.tolist()
    rng = np.random.default_rng(seed)
    triples = [tuple(int(x) for x in rng.choice(n, 3, replace=False)) for _ in range(sample if n > 3 else 0)]
    hull = T.hull_vertices()
    triples += [(hull[i - 2], hull[i - 1], hull[i]) for i in range(len(hull))]
    for a, b, c in triples:
        if orient_sign(*P[a], *P[b], *P[c]) == 0:
            raise DegenerateInputError("three collinear points", (a, b, c))
    for u, v in T.interior_edges():
        w, t = T.apex(u, v), T.apex(v, u)
        if incircle_sign(*P[u], *P[v], *P[w], *P[t]) == 0:
            raise DegenerateInputError("four cocircular points", (u, v, w, t))
