"""Parametric compact plane sets with closed-form analytic capacity.

The families implemented here (disk, segment, ellipse) are connected, so
their analytic capacity coincides with the logarithmic capacity and is
available in closed form through the exterior Riemann map.  A brute-force
transfinite-diameter optimizer serves as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.optimize import minimize

from .errors import OptimizerBudgetExceeded, UnsupportedSet


def _check_finite(z: complex, what: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{what} must be finite, got {z!r}")


@dataclass(frozen=True)
class Disk:
    center: complex = 0j
    radius: float = 1.0

    def __post_init__(self):
        _check_finite(complex(self.center), "disk center")
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")


@dataclass(frozen=True)
class Segment:
    a: complex
    b: complex

    def __post_init__(self):
        _check_finite(complex(self.a), "segment endpoint")
        _check_finite(complex(self.b), "segment endpoint")
        if self.a == self.b:
            raise ValueError("segment endpoints must be distinct")


@dataclass(frozen=True)
class Ellipse:
    center: complex = 0j
    semi_major: float = 1.0
    semi_minor: float = 1.0
    rotation: float = 0.0

    def __post_init__(self):
        _check_finite(complex(self.center), "ellipse center")
        if not (self.semi_major >= self.semi_minor > 0):
            raise ValueError("require semi_major >= semi_minor > 0")


@dataclass(frozen=True)
class FinitePointCloud:
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(complex(p) for p in self.points))
        if not self.points:
            raise ValueError("point cloud must be non-empty")
        for p in self.points:
            _check_finite(p, "cloud point")


CompactSet = Union[Disk, Segment, Ellipse, FinitePointCloud]


def is_connected(cset: CompactSet) -> bool:
    if isinstance(cset, FinitePointCloud):
        return len(cset.points) < 2
    return True


def analytic_capacity(cset: CompactSet) -> float:
    """Closed-form analytic capacity of the connected parametric families.

    Disk: the radius.  Segment: length/4.  Ellipse: (semi_major+semi_minor)/2.
    Raises UnsupportedSet for point clouds (no closed form implemented here).
    """
    if isinstance(cset, Disk):
        return float(cset.radius)
    if isinstance(cset, Segment):
        return abs(cset.b - cset.a) / 4.0
    if isinstance(cset, Ellipse):
        return (cset.semi_major + cset.semi_minor) / 2.0
    if isinstance(cset, FinitePointCloud):
        raise UnsupportedSet("no closed-form capacity for finite point clouds")
    raise UnsupportedSet(f"unknown set type {type(cset).__name__}")


def support_radius(cset: CompactSet) -> float:
    """max |z| over the set, from the parametric description."""
    if isinstance(cset, Disk):
        return abs(cset.center) + cset.radius
    if isinstance(cset, Segment):
        return max(abs(cset.a), abs(cset.b))
    if isinstance(cset, FinitePointCloud):
        return max(abs(p) for p in cset.points)
    if isinstance(cset, Ellipse):
        if cset.center == 0:
            return cset.semi_major
        # maximize |center + e^{i rot}(A cos, B sin)| over the boundary angle
        theta = np.linspace(0.0, 2.0 * np.pi, 4096, endpoint=False)
        z = boundary_points(cset, theta / (2.0 * np.pi))
        k = int(np.argmax(np.abs(z)))
        from scipy.optimize import minimize_scalar

        def neg(th):
            w = cset.center + np.exp(1j * cset.rotation) * (
                cset.semi_major * math.cos(th) + 1j * cset.semi_minor * math.sin(th)
            )
            return -abs(w)

        span = 2.0 * np.pi / 4096
        res = minimize_scalar(neg, bounds=(theta[k] - span, theta[k] + span),
                              method="bounded", options={"xatol": 1e-14})
        return float(-res.fun)
    raise UnsupportedSet(f"unknown set type {type(cset).__name__}")


def boundary_points(cset: CompactSet, t) -> np.ndarray:
    """Boundary sampler: parameter t in [0, 1) to points of the set."""
    t = np.asarray(t, dtype=float)
    if isinstance(cset, Disk):
        return cset.center + cset.radius * np.exp(2j * np.pi * t)
    if isinstance(cset, Segment):
        return cset.a + t * (cset.b - cset.a)
    if isinstance(cset, Ellipse):
        th = 2.0 * np.pi * t
        return cset.center + np.exp(1j * cset.rotation) * (
            cset.semi_major * np.cos(th) + 1j * cset.semi_minor * np.sin(th)
        )
    raise UnsupportedSet(f"no boundary sampler for {type(cset).__name__}")


def _boundary_velocity(cset: CompactSet, t: np.ndarray) -> np.ndarray:
    if isinstance(cset, Disk):
        return cset.radius * 2j * np.pi * np.exp(2j * np.pi * t)
    if isinstance(cset, Segment):
        return np.full_like(t, cset.b - cset.a, dtype=complex)
    if isinstance(cset, Ellipse):
        th = 2.0 * np.pi * t
        return np.exp(1j * cset.rotation) * 2.0 * np.pi * (
            -cset.semi_major * np.sin(th) + 1j * cset.semi_minor * np.cos(th)
        )
    raise UnsupportedSet(f"no boundary sampler for {type(cset).__name__}")


def transfinite_diameter(cset: CompactSet, n: int, optimizer_budget: int = 64,
                         seed: int = 0) -> float:
    """n-th transfinite diameter d_n by seeded multistart local ascent.

    d_n = max over n-point configurations on the set of the geometric mean
    of pairwise distances, (prod |z_i - z_j|)^(2/(n(n-1))).  Non-increasing
    in n, converging to the logarithmic capacity from above.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if optimizer_budget < 1:
        raise OptimizerBudgetExceeded("optimizer_budget must be >= 1")
    boundary_points(cset, 0.0)  # raises UnsupportedSet when no sampler exists

    periodic = not isinstance(cset, Segment)
    iu, ju = np.triu_indices(n, 1)

    def objective(t):
        z = boundary_points(cset, t)
        diff = z[iu] - z[ju]
        d = np.abs(diff)
        if np.any(d < 1e-13):
            return 1e9, np.zeros(n)
        val = -np.log(d).sum()
        v = _boundary_velocity(cset, t)
        full = z[:, None] - z[None, :]
        np.fill_diagonal(full, 1.0)
        g = np.real(np.conj(full) * v[:, None]) / np.abs(full) ** 2
        np.fill_diagonal(g, 0.0)
        return val, -g.sum(axis=1)

    rng = np.random.default_rng(seed)
    bounds = None if periodic else [(0.0, 1.0)] * n
    best = np.inf
    usable = 0
    for start in range(optimizer_budget):
        if start == 0:
            t0 = (np.arange(n) + 0.5) / n
        else:
            t0 = np.sort(rng.random(n))
        res = minimize(objective, t0, jac=True, method="L-BFGS-B", bounds=bounds)
        if np.isfinite(res.fun) and res.fun < 1e8:
            usable += 1
            best = min(best, float(res.fun))
    if usable == 0:
        raise OptimizerBudgetExceeded(
            f"no usable configuration found in {optimizer_budget} starts")
    # best holds -sum log distances at the optimum
    return float(np.exp(-2.0 * best / (n * (n - 1))))
