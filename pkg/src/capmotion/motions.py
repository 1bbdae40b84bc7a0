"""Holomorphic motions of the sphere fixing infinity.

Each motion is a closed analytic family f(lambda, z), holomorphic in lambda,
injective in z, with f(0, z) = z, and conformal off its annotated base set.
The closed enumeration (identity, translation, scale/rotate, Joukowski pull,
plus the rebase and exponential-scaling wrappers) keeps the conformality
hypothesis true by construction; user callbacks go through CustomMotion and
are explicitly unchecked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from .errors import CapmotionError, DomainViolation, OutOfParameterDisk

DEFAULT_RHO_MAX = 0.9


def mobius_reparam(lambda0: float, lam):
    """Disk automorphism (lambda0 - lambda) / (1 - lambda*lambda0)."""
    lam = np.asarray(lam)
    return (lambda0 - lam) / (1.0 - lam * lambda0)


class _MotionBase:
    """Shared evaluation wrapper: parameter/domain checks around _map."""

    def min_domain_radius(self) -> float:
        return 0.0

    def evaluate(self, lam, z):
        """f(lambda, z); lam and z may be scalars or broadcastable arrays."""
        lam_a = np.asarray(lam, dtype=complex)
        z_a = np.asarray(z, dtype=complex)
        if np.any(np.abs(lam_a) > self.rho_max + 1e-12):
            raise OutOfParameterDisk(
                f"|lambda| exceeds rho_max={self.rho_max} for {type(self).__name__}")
        rmin = self.min_domain_radius()
        if rmin > 0 and np.any(np.abs(z_a) < rmin):
            raise DomainViolation(
                f"z inside the exclusion region |z| < {rmin}")
        out = self._map(lam_a, z_a)
        if np.isscalar(lam) or lam_a.ndim == 0:
            if np.isscalar(z) or z_a.ndim == 0:
                return complex(out)
        return out

    def invert(self, lam, w):
        """Inverse in z of f(lam, .), needed for base-point changes."""
        lam_a = np.asarray(lam, dtype=complex)
        if np.any(np.abs(lam_a) > self.rho_max + 1e-12):
            raise OutOfParameterDisk(
                f"|lambda| exceeds rho_max={self.rho_max} for {type(self).__name__}")
        out = self._invert(lam_a, np.asarray(w, dtype=complex))
        if (np.isscalar(lam) or lam_a.ndim == 0) and np.asarray(w).ndim == 0:
            return complex(out)
        return out


@dataclass(frozen=True)
class Identity(_MotionBase):
    rho_max: float = DEFAULT_RHO_MAX
    conformal_off: object = None

    def _map(self, lam, z):
        return z + 0 * lam

    def _invert(self, lam, w):
        return w + 0 * lam


@dataclass(frozen=True)
class Translation(_MotionBase):
    c: complex = 1.0
    rho_max: float = DEFAULT_RHO_MAX
    conformal_off: object = None

    def _map(self, lam, z):
        return z + lam * self.c

    def _invert(self, lam, w):
        return w - lam * self.c


@dataclass(frozen=True)
class ScaleRotate(_MotionBase):
    alpha: complex = 1.0
    rho_max: float = DEFAULT_RHO_MAX
    conformal_off: object = None

    def _map(self, lam, z):
        return np.exp(self.alpha * lam) * z

    def _invert(self, lam, w):
        return np.exp(-self.alpha * lam) * w


@dataclass(frozen=True)
class Joukowski(_MotionBase):
    """f(lambda, z) = z + lambda*c/z on |z| > exclusion_radius.

    |c| <= exclusion_radius**2 guarantees injectivity there for |lambda| < 1:
    a collision forces z1*z2 = lambda*c, impossible outside the exclusion disk.
    """

    c: complex = 1.0
    exclusion_radius: float = 1.0
    rho_max: float = DEFAULT_RHO_MAX
    conformal_off: object = None

    def __post_init__(self):
        if self.exclusion_radius <= 0:
            raise ValueError("exclusion_radius must be positive")
        if abs(self.c) > self.exclusion_radius ** 2 + 1e-12:
            raise ValueError("require |c| <= exclusion_radius**2 for injectivity")

    def min_domain_radius(self) -> float:
        return self.exclusion_radius

    def _map(self, lam, z):
        return z + lam * self.c / z

    def _invert(self, lam, w):
        # z**2 - w z + lam c = 0; the exterior preimage is the larger root
        s = np.sqrt(w * w - 4.0 * lam * self.c)
        r1 = (w + s) / 2.0
        r2 = (w - s) / 2.0
        return np.where(np.abs(r1) >= np.abs(r2), r1, r2)


@dataclass(frozen=True)
class Scaled(_MotionBase):
    """e^{alpha*lambda} * inner(lambda, z), alpha real."""

    inner: object
    alpha: float = 1.0

    @property
    def rho_max(self) -> float:
        return self.inner.rho_max

    @property
    def conformal_off(self):
        return self.inner.conformal_off

    def min_domain_radius(self) -> float:
        return self.inner.min_domain_radius()

    def _map(self, lam, z):
        return np.exp(self.alpha * lam) * self.inner._map(lam, z)

    def _invert(self, lam, w):
        return self.inner._invert(lam, np.exp(-self.alpha * lam) * w)


@dataclass(frozen=True)
class Rebased(_MotionBase):
    """Base-point change f~(lambda, z) = f(mu(lambda), f_{lambda0}^{-1}(z))
    with mu(lambda) = (lambda0 - lambda)/(1 - lambda*lambda0), lambda0 real.
    """

    inner: object
    lambda0: float

    def __post_init__(self):
        if not -1.0 < self.lambda0 < 1.0:
            raise OutOfParameterDisk("lambda0 must lie in (-1, 1)")
        if abs(self.lambda0) > self.inner.rho_max + 1e-12:
            raise OutOfParameterDisk("|lambda0| exceeds the inner rho_max")

    @property
    def rho_max(self) -> float:
        # largest rho with mu({|lam|<=rho}) inside the inner parameter disk
        r = self.inner.rho_max
        a = abs(self.lambda0)
        return min(r, (r - a) / (1.0 - r * a))

    @property
    def conformal_off(self):
        return self.inner.conformal_off

    def min_domain_radius(self) -> float:
        return self.inner.min_domain_radius()

    def _map(self, lam, z):
        return self.inner._map(mobius_reparam(self.lambda0, lam),
                               self.inner._invert(np.asarray(self.lambda0, dtype=complex), z))

    def _invert(self, lam, w):
        return self.inner._map(np.asarray(self.lambda0, dtype=complex),
                               self.inner._invert(mobius_reparam(self.lambda0, lam), w))


@dataclass(frozen=True)
class CustomMotion(_MotionBase):
    """Unchecked user family: conformality off the base set is NOT verified."""

    func: Callable
    rho_max: float = DEFAULT_RHO_MAX
    exclusion_radius: float = 0.0
    conformal_off: object = None

    def min_domain_radius(self) -> float:
        return self.exclusion_radius

    def _map(self, lam, z):
        return self.func(lam, z)

    def _invert(self, lam, w):
        raise CapmotionError("custom motions are unchecked and not invertible")


def rebase(motion, lambda0: float) -> Rebased:
    """Move the motion's identity point to lambda0 (real)."""
    return Rebased(motion, float(lambda0))


@dataclass
class MotionAxiomReport:
    identity_at_zero: float
    injectivity_violations: List[Tuple[complex, complex, complex]]
    holomorphy_deviation: float
    joint_continuity_modulus: List[Tuple[float, float]]

    @property
    def clean(self) -> bool:
        return (self.identity_at_zero < 1e-9
                and not self.injectivity_violations)


def verify_motion_axioms(motion, sample_count: int, seed: int = 0,
                         tol: float = 1e-9,
                         collision_tol: Optional[float] = None) -> MotionAxiomReport:
    """Statistical check of the motion axioms on seeded samples.

    (a) f(0, z) = z; (b) injectivity of sampled point pairs at sampled
    lambda; (c) holomorphy in lambda via the Cauchy mean-value residual on
    16-point circles; (d) a sampled joint-continuity modulus table.
    Violations are reported, never thrown.
    """
    if sample_count < 2:
        raise ValueError("need sample_count >= 2")
    rng = np.random.default_rng(seed)
    rho = motion.rho_max
    rmin = motion.min_domain_radius()

    radii = rmin + 0.2 + 2.5 * rng.random(sample_count)
    zs = radii * np.exp(2j * np.pi * rng.random(sample_count))

    dev0 = float(np.max(np.abs(motion.evaluate(0.0, zs) - zs)))

    ctol = tol if collision_tol is None else collision_tol
    lam_samples = [rho, -rho, 1j * rho, -1j * rho]
    lam_samples += list(rho * np.sqrt(rng.random(8))
                        * np.exp(2j * np.pi * rng.random(8)))
    violations = []
    iu, ju = np.triu_indices(len(zs), 1)
    for lam in lam_samples:
        w = np.asarray(motion.evaluate(complex(lam), zs))
        close = np.abs(w[iu] - w[ju]) < ctol
        separated = np.abs(zs[iu] - zs[ju]) > ctol
        for k in np.nonzero(close & separated)[0]:
            violations.append((complex(lam), complex(zs[iu[k]]), complex(zs[ju[k]])))

    # Cauchy mean-value in lambda on small circles around interior lambda0
    m = min(sample_count, 32)
    lam0s = 0.5 * rho * np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))
    zsub = zs[: min(16, len(zs))]
    r = 0.05 * rho
    phis = np.exp(2j * np.pi * np.arange(16) / 16)
    holo_dev = 0.0
    for lam0 in lam0s:
        center = np.asarray(motion.evaluate(complex(lam0), zsub))
        ring = np.mean(
            [np.asarray(motion.evaluate(complex(lam0 + r * p), zsub)) for p in phis],
            axis=0)
        holo_dev = max(holo_dev, float(np.max(np.abs(center - ring))))

    # joint-continuity modulus: bin sampled input distances against output ones
    npairs = 200
    la = 0.7 * rho * np.sqrt(rng.random(npairs)) * np.exp(2j * np.pi * rng.random(npairs))
    lb = la + 0.1 * rho * (rng.random(npairs) - 0.5 + 1j * (rng.random(npairs) - 0.5))
    lb = np.where(np.abs(lb) > rho, la, lb)
    za = zs[rng.integers(0, len(zs), npairs)]
    zb = za + (rng.random(npairs) - 0.5 + 1j * (rng.random(npairs) - 0.5))
    zb = np.where(np.abs(zb) <= rmin + 0.05, za, zb)
    fa = np.asarray(motion.evaluate(la[:, None], za[:, None])).ravel()
    fb = np.asarray(motion.evaluate(lb[:, None], zb[:, None])).ravel()
    din = np.hypot(np.abs(la - lb), np.abs(za - zb))
    dout = np.abs(fa - fb)
    edges = np.quantile(din, np.linspace(0.0, 1.0, 9))
    table = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        sel = (din >= lo) & (din <= hi)
        if np.any(sel):
            table.append((float(hi), float(dout[sel].max())))

    return MotionAxiomReport(identity_at_zero=dev0,
                             injectivity_violations=violations,
                             holomorphy_deviation=holo_dev,
                             joint_continuity_modulus=table)
