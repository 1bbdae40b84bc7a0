"""Capacity profiles over lambda-grids and harmonicity diagnostics.

log gamma(K_lambda) is harmonic in lambda whenever the motion is conformal
off the base set; this module samples the profile on a square grid clipped
to a parameter disk and checks harmonicity two independent ways (5-point
Laplacian stencil and discrete mean-value circles), together with the
Harnack two-sided bound, one-sided mean-value tests, and the exponential
rescaling criterion for log-subharmonicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .coefficients import QuadratureConfig, coefficient_grid, default_quadrature
from .errors import (GridTooSmall, InvalidBound, OutOfParameterDisk,
                     RadiusTooSmall, ZeroCapacityBase)
from .sets import FinitePointCloud, analytic_capacity, support_radius

MEAN_VALUE_OFFSETS = (4, 8)  # circle radii in grid steps
DEFAULT_RADO_ALPHAS = tuple(np.linspace(-8.0, 8.0, 33))


@dataclass(frozen=True)
class LambdaGrid:
    h: float
    half_width: int
    center: complex = 0j
    clip_radius: float = 0.9

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("spacing h must be positive")
        if self.half_width < 1:
            raise ValueError("half_width must be >= 1")
        if not 0 < self.clip_radius < 1:
            raise ValueError("clip_radius must lie in (0, 1)")

    def lambdas(self) -> np.ndarray:
        """Grid points as a (2w+1, 2w+1) complex array, row = imag axis."""
        off = self.h * np.arange(-self.half_width, self.half_width + 1)
        return (self.center.real + off[None, :]) + 1j * (self.center.imag + off[:, None])

    def mask(self) -> np.ndarray:
        """True at grid points retained by the clip disk |lambda| <= clip."""
        return np.abs(self.lambdas()) <= self.clip_radius + 1e-15


@dataclass
class CapacityProfile:
    grid: LambdaGrid
    abs_a: np.ndarray
    gamma: np.ndarray
    log_gamma: np.ndarray
    base_gamma: float


@dataclass
class HarmonicityReport:
    max_laplacian_residual: float
    mean_value_deviations: List[Tuple[float, float]]
    verdict: str  # "consistent" | "violated"
    laplacian_residuals: np.ndarray = field(repr=False, default=None)


@dataclass
class SubharmonicityReport:
    verdict: str  # "consistent" | "violated"
    violated_at: List[complex]
    max_excess: float


@dataclass
class RadoReport:
    per_alpha: List[Tuple[float, str, int]]
    all_consistent: bool
    violating_alphas: List[float]


def capacity_profile(base, motion, grid: LambdaGrid,
                     quad: Optional[QuadratureConfig] = None) -> CapacityProfile:
    """Evaluate gamma(K_lambda) = |a(lambda)| gamma(K) on every retained
    grid point.  Deterministic for a fixed quadrature configuration."""
    if isinstance(base, FinitePointCloud):
        raise ZeroCapacityBase("finite sets have zero analytic capacity")
    gamma0 = analytic_capacity(base)
    if quad is None:
        quad = default_quadrature(base, motion)
    if quad.radius <= support_radius(base):
        raise RadiusTooSmall(
            f"radius {quad.radius} does not enclose the base set "
            f"(support radius {support_radius(base)})")
    if grid.clip_radius > motion.rho_max + 1e-12:
        raise OutOfParameterDisk(
            f"clip radius {grid.clip_radius} exceeds the motion's "
            f"rho_max {motion.rho_max}")
    lams = grid.lambdas()
    mask = grid.mask()
    values, _, _ = coefficient_grid(motion, lams[mask], quad)
    abs_a = np.full(lams.shape, np.nan)
    abs_a[mask] = np.abs(values)
    gamma = abs_a * gamma0
    with np.errstate(invalid="ignore", divide="ignore"):
        log_gamma = np.log(gamma)
    return CapacityProfile(grid=grid, abs_a=abs_a, gamma=gamma,
                           log_gamma=log_gamma, base_gamma=gamma0)


def synthetic_profile(grid: LambdaGrid, log_gamma_fn) -> CapacityProfile:
    """Profile built from an injected log-gamma formula (diagnostic mode)."""
    lams = grid.lambdas()
    lg = np.where(grid.mask(), np.asarray(log_gamma_fn(lams), dtype=float), np.nan)
    gamma = np.exp(lg)
    w = grid.half_width
    return CapacityProfile(grid=grid, abs_a=gamma.copy(), gamma=gamma,
                           log_gamma=lg, base_gamma=float(gamma[w, w]))


def _axis_circle_average(u: np.ndarray, k: int) -> np.ndarray:
    """Average over the four grid points at distance k*h; NaN where the
    stencil leaves the retained region."""
    out = np.full_like(u, np.nan)
    out[k:-k, k:-k] = (u[k:-k, 2 * k:] + u[k:-k, :-2 * k]
                       + u[2 * k:, k:-k] + u[:-2 * k, k:-k]) / 4.0
    return out


def harmonicity_test(profile: CapacityProfile, tol: float = 1e-6) -> HarmonicityReport:
    """Two independent harmonicity checks of log gamma.

    5-point Laplacian residuals at all interior points, and mean-value
    deviations |u(center) - circle average| on circles of radius 4h and 8h.
    Verdict is "consistent" iff the largest Laplacian residual is below tol.
    """
    u = profile.log_gamma
    if not np.all(np.isfinite(u[profile.grid.mask()])):
        raise ValueError("profile contains non-finite log gamma values")
    h = profile.grid.h
    res = np.full_like(u, np.nan)
    res[1:-1, 1:-1] = (u[1:-1, 2:] + u[1:-1, :-2] + u[2:, 1:-1] + u[:-2, 1:-1]
                       - 4.0 * u[1:-1, 1:-1]) / h ** 2
    finite = np.isfinite(res)
    if not np.any(finite):
        raise GridTooSmall("no interior points for the Laplacian stencil")
    max_res = float(np.nanmax(np.abs(res)))

    deviations = []
    for k in MEAN_VALUE_OFFSETS:
        if 2 * k >= u.shape[0]:
            continue
        avg = _axis_circle_average(u, k)
        dev = np.abs(u - avg)
        if np.any(np.isfinite(dev)):
            deviations.append((k * h, float(np.nanmax(dev))))
    verdict = "consistent" if max_res < tol else "violated"
    return HarmonicityReport(max_laplacian_residual=max_res,
                             mean_value_deviations=deviations,
                             verdict=verdict,
                             laplacian_residuals=res)


def harnack_check(profile: CapacityProfile, m_bound: float,
                  tol: float = 1e-12) -> List[tuple]:
    """Two-sided Harnack bound on u = log(M/gamma) over the clipped disk.

    The bounds are normalized to the disk actually sampled: with
    rho = clip_radius, requires

        (rho-|l|)/(rho+|l|) <= log(M/gamma(K_l)) / log(M/gamma(K))
                            <= (rho+|l|)/(rho-|l|)

    at every retained grid point; u is positive harmonic on that disk
    whenever M bounds gamma there.  Returns the offending points.
    """
    mask = profile.grid.mask()
    gmax = float(np.nanmax(profile.gamma))
    if m_bound < gmax:
        raise InvalidBound(f"M = {m_bound} is below the profile supremum {gmax}")
    if not profile.base_gamma < m_bound:
        raise InvalidBound("require gamma(K) < M")
    rho = profile.grid.clip_radius
    lams = profile.grid.lambdas()
    u0 = np.log(m_bound / profile.base_gamma)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.log(m_bound / profile.gamma) / u0
        absl = np.abs(lams)
        lower = (rho - absl) / (rho + absl)
        upper = np.where(absl < rho, (rho + absl) / np.maximum(rho - absl, 1e-300), np.inf)
    bad = mask & ((ratio < lower - tol) | (ratio > upper + tol))
    return [(complex(lams[i, j]), float(ratio[i, j]), float(lower[i, j]),
             float(upper[i, j])) for i, j in zip(*np.nonzero(bad))]


def subharmonicity_test(values: np.ndarray, grid: LambdaGrid,
                        tol: float = 1e-8) -> SubharmonicityReport:
    """Sub-mean-value inequality u(center) <= circle average + tol on the
    discrete circles of radius 4h and 8h.  Negate the input to test
    superharmonicity."""
    u = np.where(grid.mask(), values, np.nan)
    lams = grid.lambdas()
    violated = []
    max_excess = 0.0
    tested = 0
    for k in MEAN_VALUE_OFFSETS:
        if 2 * k >= u.shape[0]:
            continue
        avg = _axis_circle_average(u, k)
        excess = u - avg
        finite = np.isfinite(excess)
        tested += int(finite.sum())
        if np.any(finite):
            max_excess = max(max_excess, float(np.nanmax(excess)))
        bad = finite & (excess > tol)
        violated.extend(complex(lams[i, j]) for i, j in zip(*np.nonzero(bad)))
    if tested == 0:
        raise GridTooSmall("no testable centers for the mean-value circles")
    verdict = "consistent" if not violated else "violated"
    return SubharmonicityReport(verdict=verdict,
                                violated_at=sorted(set(violated), key=abs),
                                max_excess=max_excess)


def superharmonicity_test(values: np.ndarray, grid: LambdaGrid,
                          tol: float = 1e-8) -> SubharmonicityReport:
    return subharmonicity_test(-np.asarray(values), grid, tol)


def rado_criterion_check(values: np.ndarray, grid: LambdaGrid,
                         alphas=DEFAULT_RADO_ALPHAS,
                         tol: float = 1e-8) -> RadoReport:
    """Exponential-rescaling criterion: log u is subharmonic iff
    e^{alpha Re lambda} u is subharmonic for every real alpha.  Runs the
    sub-mean-value test for each supplied alpha (a finite, necessary-
    condition surrogate for the full real line)."""
    values = np.asarray(values, dtype=float)
    mask = grid.mask()
    if np.any(values[mask] <= 0):
        raise ValueError("values must be strictly positive")
    x = grid.lambdas().real
    per_alpha = []
    violating = []
    for alpha in alphas:
        scaled = np.exp(alpha * x) * values
        rep = subharmonicity_test(scaled, grid, tol)
        per_alpha.append((float(alpha), rep.verdict, len(rep.violated_at)))
        if rep.verdict == "violated":
            violating.append(float(alpha))
    return RadoReport(per_alpha=per_alpha,
                      all_consistent=not violating,
                      violating_alphas=violating)
