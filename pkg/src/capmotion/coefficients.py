"""Leading coefficient at infinity by contour quadrature.

For a motion that is conformal off the base set and fixes infinity,
f(lambda, z) = a(lambda) z + O(1) near infinity, and

    a(lambda) = (1/2 pi i) * integral over |z|=R of f(lambda, z)/z^2 dz

for every R exceeding both the support radius of the base set and the
motion's excluded region.  Equispaced nodes (periodic trapezoid rule)
converge geometrically for integrands holomorphic in an annulus; the node
count is doubled until two successive estimates agree.  Analytic capacity
propagates as gamma(K_lambda) = |a(lambda)| * gamma(K): the scaling map
h(z) = a z sends the complement of the unit disk onto the complement of the
radius-|a| disk, which pins this orientation of the ratio.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (QuadratureNonconvergence, RadiusTooSmall, ZeroCapacityBase,
                     ZeroCoefficient)
from .sets import FinitePointCloud, analytic_capacity, support_radius


@dataclass(frozen=True)
class QuadratureConfig:
    radius: float
    nodes: int = 256
    tol: float = 1e-12
    max_doublings: int = 6

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        n = self.nodes
        if n < 16 or (n & (n - 1)) != 0:
            raise ValueError("nodes must be a power of two >= 16")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_doublings < 1:
            raise ValueError("max_doublings must be >= 1")


@dataclass(frozen=True)
class LeadingCoefficient:
    value: complex
    achieved_tol: float
    nodes_used: int


def default_radius(base, motion) -> float:
    """2 * max(support radius of the base, excluded radius of the motion)."""
    return 2.0 * max(support_radius(base), motion.min_domain_radius())


def default_quadrature(base, motion, nodes: int = 256, tol: float = 1e-12,
                       max_doublings: int = 6) -> QuadratureConfig:
    return QuadratureConfig(radius=default_radius(base, motion), nodes=nodes,
                            tol=tol, max_doublings=max_doublings)


def _ring_estimate(motion, lams: np.ndarray, radius: float, n: int) -> np.ndarray:
    """Trapezoid estimate of a(lambda) for a 1-d array of parameters."""
    theta = 2.0 * np.pi * np.arange(n) / n
    nodes = radius * np.exp(1j * theta)
    f = np.asarray(motion.evaluate(lams[:, None], nodes[None, :]))
    return (f * np.exp(-1j * theta)[None, :]).mean(axis=1) / radius


def coefficient_grid(motion, lams: np.ndarray, quad: QuadratureConfig):
    """Converged coefficients for many lambdas at once.

    Returns (values, per-point achieved differences, nodes used).  Raises
    QuadratureNonconvergence locating the worst lambda on failure.
    """
    if quad.radius <= motion.min_domain_radius():
        raise RadiusTooSmall(
            f"radius {quad.radius} does not clear the excluded region "
            f"of radius {motion.min_domain_radius()}")
    lams = np.asarray(lams, dtype=complex).ravel()
    n = quad.nodes
    prev = _ring_estimate(motion, lams, quad.radius, n)
    for _ in range(quad.max_doublings):
        n *= 2
        cur = _ring_estimate(motion, lams, quad.radius, n)
        diff = np.abs(cur - prev)
        if diff.max() < quad.tol:
            return cur, diff, n
        prev = cur
    worst = lams[int(np.argmax(diff))]
    raise QuadratureNonconvergence(
        f"tolerance {quad.tol} not met after {quad.max_doublings} doublings "
        f"(worst lambda {worst})")


def leading_coefficient(motion, lam: complex, quad: QuadratureConfig) -> LeadingCoefficient:
    """a(lambda) with node doubling until two estimates agree within tol."""
    values, diffs, n = coefficient_grid(motion, np.array([lam]), quad)
    a = complex(values[0])
    if abs(a) < quad.tol:
        raise ZeroCoefficient(
            f"|a| = {abs(a)} below tolerance; the family is not conformal "
            "at infinity")
    return LeadingCoefficient(value=a, achieved_tol=float(diffs[0]), nodes_used=n)


def r_independence_check(motion, lam: complex, r1: float, r2: float,
                         n: int = 64) -> float:
    """|a(R1) - a(R2)| at fixed node count; Cauchy's theorem forces this to
    quadrature-noise level for any two admissible radii."""
    for r in (r1, r2):
        if r <= motion.min_domain_radius():
            raise RadiusTooSmall(f"radius {r} inside the excluded region")
    lams = np.array([lam], dtype=complex)
    a1 = _ring_estimate(motion, lams, r1, n)[0]
    a2 = _ring_estimate(motion, lams, r2, n)[0]
    return float(abs(a1 - a2))


def capacity_under_motion(base, motion, lam: complex,
                          quad: QuadratureConfig | None = None) -> float:
    """gamma(K_lambda) = |a(lambda)| * gamma(K)."""
    if isinstance(base, FinitePointCloud):
        raise ZeroCapacityBase("finite sets have zero analytic capacity")
    gamma0 = analytic_capacity(base)
    if quad is None:
        quad = default_quadrature(base, motion)
    if quad.radius <= support_radius(base):
        raise RadiusTooSmall(
            f"radius {quad.radius} does not enclose the base set "
            f"(support radius {support_radius(base)})")
    a = leading_coefficient(motion, lam, quad)
    return abs(a.value) * gamma0
