"""Asymptotic density of useful-k edges among uniform random points.

An edge uv with witnesses w (left) and t (right) is useful-k but not
useful-(k-1) when the two inner lens segments A_w, A_t are empty and the
outer regions B_t \\ A_w, B_w \\ A_t hold point counts (j, i) with
max(i, j) = k - 1. Under the scaling l/2 = a/sqrt(n), r = a/sin(angle/2)
every area is a^2 times a function of one angle, so the Poisson weights
integrate out in closed form over a:

    int_0^inf a^(5+2m) exp(-P a^2) da = (m+2)! / (2 P^(m+3)).

That leaves a 2D integral over the two angles, evaluated with scipy's
adaptive quadrature. A direct 3D quadrature over (a, theta, sigma) is kept
as an independent check of the reduction.

Two events contribute: E1, where both circle centres lie on their own
witness side, and E2, where the centre of C(u, v, w) crosses to the other
side (theta < sigma). The mirror of E2 has equal weight, so
d_k = (I1 + 2 I2) / 2.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy import integrate, stats

from .delaunay import delaunay_triangulate
from .errors import NonConvergenceError
from .hulls import lower_bound_constant
from .orders import useful_k_edges

__all__ = [
    "LuneGeometry",
    "IntegralConfig",
    "IntegralResult",
    "ExpectationConstants",
    "MonteCarloReport",
    "ExponentBound",
    "segment_area",
    "scaled_minor",
    "scaled_major",
    "integrate_c1",
    "integrate_c2",
    "compute_d1",
    "integrate_dk",
    "expected_count_bound",
    "monte_carlo_uk",
    "delaunay_by_angles",
    "D1_REFERENCE",
]

# Value the asymptotic analysis quotes for d_1; used only as a comparison target.
D1_REFERENCE = 0.525785
K_CAP = 8


# ---------------------------------------------------------------- areas

def segment_area(ell: float, r: float) -> float:
    """Area of the minor circular segment cut from a radius-r disk by a chord of length ell."""
    if not (r > ell / 2 > 0):
        raise ValueError("need r > ell/2 > 0")
    return r * r * math.asin(ell / (2 * r)) - (ell / 2) * math.sqrt(r * r - ell * ell / 4)


@dataclass(frozen=True)
class LuneGeometry:
    """Regions around a segment uv of length ``ell`` with witness circles of radii r_w, r_t.

    Both circles pass through u and v with centres on their own witness
    side. A_w is the part of the w-disk beyond uv (on t's side), B_t the
    part of the t-disk on t's side; A_t and B_w mirror them.
    """

    ell: float
    r_w: float
    r_t: float

    def __post_init__(self):
        if not (self.r_w > self.ell / 2 > 0 and self.r_t > self.ell / 2):
            raise ValueError("radii must exceed ell/2 and ell must be positive")

    @property
    def area_A_w(self) -> float:
        return segment_area(self.ell, self.r_w)

    @property
    def area_A_t(self) -> float:
        return segment_area(self.ell, self.r_t)

    @property
    def area_B_t_minus_A_w(self) -> float:
        return math.pi * self.r_t ** 2 - self.area_A_t - self.area_A_w

    @property
    def area_B_w_minus_A_t(self) -> float:
        return math.pi * self.r_w ** 2 - self.area_A_w - self.area_A_t


def scaled_minor(t):
    """Minor segment area over a^2 when the chord subtends angle t at the circle."""
    return (t - np.sin(t)) / (1 - np.cos(t))


def scaled_major(t):
    """Major segment area over a^2, the complement of :func:`scaled_minor` in the disk."""
    return (2 * np.pi - t + np.sin(t)) / (1 - np.cos(t))


def _density_e1(t):
    # radius density after both substitutions, divided by a^2
    return (t / np.tan(t / 2) - 2) / (1 - np.cos(t))


def _density_e2(t):
    return ((t - 2 * np.pi) / np.tan(t / 2) - 2) / (1 - np.cos(t))


# ---------------------------------------------------------------- quadrature

@dataclass(frozen=True)
class IntegralConfig:
    """Quadrature settings.

    ``tolerance`` is passed as both the absolute and relative target of the
    adaptive rules. ``method`` is "reduced" (2D after the closed-form a
    integral) or "direct" (3D with the a-range truncated where the tail
    falls below tolerance / 10).
    """

    k: int = 1
    tolerance: float = 1e-9
    method: str = "reduced"
    k_cap: int = K_CAP

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.method not in ("reduced", "direct"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.k < 1:
            raise ValueError("k must be at least 1")


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error: float
    method: str


def _count_pairs(k: int) -> List[Tuple[int, int]]:
    return [(j, i) for j in range(k) for i in range(k) if max(i, j) == k - 1]


def _areas(event: int, theta, sigma):
    """Scaled (P, B_t, B_w): empty-region area and the two outer counting regions."""
    if event == 1:
        P = scaled_major(theta) + scaled_major(sigma)
        return P, scaled_major(sigma) - scaled_minor(theta), scaled_major(theta) - scaled_minor(sigma)
    P = scaled_major(sigma) + scaled_minor(theta)
    return P, scaled_major(sigma) - scaled_major(theta), scaled_minor(theta) - scaled_minor(sigma)


def _reduced_integrand(event: int, k: int) -> Callable[[float, float], float]:
    dens = _density_e1 if event == 1 else _density_e2
    terms = [(j, i, 1.0 / (math.factorial(i) * math.factorial(j)) * math.factorial(i + j + 2) / 2.0)
             for j, i in _count_pairs(k)]

    def f(sigma: float, theta: float) -> float:
        P, bt, bw = _areas(event, theta, sigma)
        s = 0.0
        for j, i, c in terms:
            s += c * bt ** j * bw ** i / P ** (i + j + 3)
        return 8 * math.pi * dens(theta) * _density_e1(sigma) * s

    return f


def _tail_cut(m_max: int, frac: float) -> float:
    """x with int_{sqrt(x/P)}^inf a^(5+2m) e^(-P a^2) da below frac of the full integral, for all m <= m_max."""
    # In u = P a^2 the tail fraction is the upper regularized gamma Q(m+3, x).
    from scipy.special import gammainccinv
    return float(max(gammainccinv(m + 3, frac) for m in range(m_max + 1)))


def _direct_integrand(event: int, k: int, tolerance: float):
    dens = _density_e1 if event == 1 else _density_e2
    pairs = _count_pairs(k)
    fact = {(j, i): 1.0 / (math.factorial(i) * math.factorial(j)) for j, i in pairs}
    x_cut = _tail_cut(2 * (k - 1), tolerance / 10)

    def f(a: float, sigma: float, theta: float) -> float:
        P, bt, bw = _areas(event, theta, sigma)
        a2 = a * a
        s = sum(c * (bt * a2) ** j * (bw * a2) ** i for (j, i), c in fact.items())
        return 8 * math.pi * a * (a2 * dens(theta)) * (a2 * _density_e1(sigma)) * math.exp(-P * a2) * s

    def a_max(sigma: float, theta: float) -> float:
        P, _, _ = _areas(event, theta, sigma)
        return math.sqrt(x_cut / P)

    return f, a_max


def _run(fn, *args, **kwargs):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, err = fn(*args, **kwargs)
    bad = [w for w in caught if issubclass(w.category, integrate.IntegrationWarning)]
    if bad:
        raise NonConvergenceError(f"quadrature did not converge: {bad[0].message}",
                                  partial={"value": value, "error": err})
    return value, err


def _event_integral(event: int, config: IntegralConfig) -> IntegralResult:
    k, tol = config.k, config.tolerance
    if k > config.k_cap:
        raise ValueError(f"k={k} exceeds the configured cap of {config.k_cap}")
    upper = (lambda t: np.pi) if event == 1 else (lambda t: t)
    if config.method == "reduced":
        value, err = _run(integrate.dblquad, _reduced_integrand(event, k), 0, np.pi, 0, upper,
                          epsabs=tol, epsrel=tol)
    else:
        f, a_max = _direct_integrand(event, k, tol)
        value, err = _run(integrate.tplquad, f, 0, np.pi, 0, upper, 0, a_max,
                          epsabs=tol, epsrel=tol)
        # truncation of the a-range adds at most tolerance/10 relative
        err += abs(value) * tol / 10
    return IntegralResult(value, err, config.method)


def integrate_c1(config: Optional[IntegralConfig] = None) -> IntegralResult:
    """Weight of the event where both witness circle centres lie on their own side."""
    config = config or IntegralConfig()
    return _event_integral(1, IntegralConfig(1, config.tolerance, config.method, config.k_cap))


def integrate_c2(config: Optional[IntegralConfig] = None) -> IntegralResult:
    """Weight of the event where the left circle centre crosses the segment."""
    config = config or IntegralConfig()
    return _event_integral(2, IntegralConfig(1, config.tolerance, config.method, config.k_cap))


@dataclass
class ExpectationConstants:
    """Event weights, edge density d_k and exponent rho_k with error estimates."""

    k: int
    c1: float
    c2: float
    d: float
    rho: float
    errors: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _constants(k: int, r1: IntegralResult, r2: IntegralResult) -> ExpectationConstants:
    d = (r1.value + 2 * r2.value) / 2
    d_err = (r1.error + 2 * r2.error) / 2
    C = 1 if k == 1 else lower_bound_constant(k)
    return ExpectationConstants(k, r1.value, r2.value, d, d / C,
                                {"c1": r1.error, "c2": r2.error, "d": d_err, "rho": d_err / C})


def compute_d1(c1: Optional[IntegralResult] = None, c2: Optional[IntegralResult] = None,
               config: Optional[IntegralConfig] = None) -> ExpectationConstants:
    """d_1 = (c_1 + 2 c_2) / 2 and rho_1 = d_1; missing weights are integrated."""
    c1 = c1 if c1 is not None else integrate_c1(config)
    c2 = c2 if c2 is not None else integrate_c2(config)
    return _constants(1, c1, c2)


def integrate_dk(k: int, config: Optional[IntegralConfig] = None) -> ExpectationConstants:
    """Density d_k of edges that are useful-k and not useful-(k-1), with rho_k = d_k / C_k.

    For k = 1 this is :func:`compute_d1`. ``c1``/``c2`` of the result hold
    the two event weights at order k.
    """
    base = config or IntegralConfig()
    cfg = IntegralConfig(k, base.tolerance, base.method, base.k_cap)
    return _constants(k, _event_integral(1, cfg), _event_integral(2, cfg))


@dataclass(frozen=True)
class ExponentBound:
    k: int
    rho: float
    rho_error: float
    C_k: int
    statement: str


def expected_count_bound(k: int, d_k: float, d_error: float = 0.0) -> ExponentBound:
    """Exponent of the lower bound on the expected number of order-k triangulations.

    rho_1 = d_1 since every useful-1 edge flips independently; for k > 1 only
    one edge in C_k is guaranteed a private hull, so rho_k = d_k / C_k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    C = 1 if k == 1 else lower_bound_constant(k)
    rho = d_k / C
    return ExponentBound(k, rho, d_error / C, C,
                         f"E[R_{k}] >= 2^({rho:.6g} n (1+o(1)))")


# ---------------------------------------------------------------- simulation

@dataclass
class MonteCarloReport:
    n: int
    k: int
    trials: int
    seed: int
    counts: List[int]
    mean_density: float
    std_density: float
    ci_low: float
    ci_high: float
    target: Optional[float] = None
    deviation: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)


def monte_carlo_uk(n: int, k: int, trials: int, seed: int = 0,
                   target: Optional[float] = None, confidence: float = 0.95) -> MonteCarloReport:
    """Count edges of useful order exactly k over ``trials`` uniform samples of n points.

    Trials draw from independent streams spawned off ``seed``, so results
    do not depend on evaluation order. The interval is a Student-t
    interval on the per-trial densities U_k / n.
    """
    if n < 10 or k < 1 or trials < 1:
        raise ValueError("need n >= 10, k >= 1 and trials >= 1")
    counts = []
    for child in np.random.SeedSequence(seed).spawn(trials):
        pts = np.random.default_rng(child).random((n, 2))
        T = delaunay_triangulate(pts)
        counts.append(len(useful_k_edges(pts, k, T=T)))
    dens = np.asarray(counts, dtype=float) / n
    mean = float(dens.mean())
    std = float(dens.std(ddof=1)) if trials > 1 else 0.0
    half = float(stats.t.ppf(0.5 + confidence / 2, trials - 1) * std / math.sqrt(trials)) if trials > 1 else math.inf
    dev = None if target is None else mean - target
    return MonteCarloReport(n, k, trials, seed, counts, mean, std, mean - half, mean + half, target, dev)


def delaunay_by_angles(u, v, w, t) -> bool:
    """True when uv is the Delaunay diagonal of the convex quad u, t, v, w by the angle test.

    The opposite angles at w and t must sum to less than pi.
    """
    def angle(p, a, b):
        x1, y1 = a[0] - p[0], a[1] - p[1]
        x2, y2 = b[0] - p[0], b[1] - p[1]
        return math.atan2(abs(x1 * y2 - y1 * x2), x1 * x2 + y1 * y2)

    return angle(w, u, v) + angle(t, u, v) < math.pi
