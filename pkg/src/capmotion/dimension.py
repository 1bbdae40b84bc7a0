"""Dimension phase transition and the non-harmonicity certificate.

Along the distortion family indexed by real lambda in [0, 1) the image
Hausdorff dimension is 2t / (t + (2-t)(1-lambda)/(1+lambda)).  For
t in (0, 1) the dimension crosses 1 at a unique threshold delta, below
which analytic capacity vanishes and above which it is positive.  That
sign flip alone certifies, by purely symbolic deduction over capacity
signs, that log gamma(K_lambda) is neither subharmonic nor superharmonic
and gamma(K_lambda) is not superharmonic.  No capacity magnitudes are
computed here; none are available for this family.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np

from .errors import DimensionDomain


class CapacitySign(Enum):
    ZERO = "zero"
    POSITIVE = "positive"
    UNKNOWN = "unknown"


def astala_dimension(t: float, lam: float) -> float:
    """dim_H of the image set: 2t / (t + (2-t)(1-lambda)/(1+lambda))."""
    if not 0.0 < t < 2.0:
        raise DimensionDomain(f"t must lie in (0, 2), got {t}")
    if not 0.0 <= lam < 1.0:
        raise DimensionDomain(f"lambda must lie in [0, 1), got {lam}")
    return 2.0 * t / (t + (2.0 - t) * (1.0 - lam) / (1.0 + lam))


def capacity_sign_from_dimension(dim: float) -> CapacitySign:
    """dim < 1 forces zero capacity, dim > 1 forces positive capacity;
    dim = 1 decides nothing."""
    if not 0.0 <= dim <= 2.0:
        raise DimensionDomain(f"dimension must lie in [0, 2], got {dim}")
    if dim < 1.0:
        return CapacitySign.ZERO
    if dim > 1.0:
        return CapacitySign.POSITIVE
    return CapacitySign.UNKNOWN


def critical_lambda_closed_form(t: float) -> float:
    """Algebraic solution of dim(t, delta) = 1.

    Setting s = (1-delta)/(1+delta), the equation reads t + (2-t)s = 2t,
    so s = t/(2-t) and delta = (1-s)/(1+s) = 1 - t.
    """
    if not 0.0 < t < 1.0:
        raise DimensionDomain(f"t must lie in (0, 1), got {t}")
    return 1.0 - t


def critical_lambda(t: float) -> float:
    """Threshold delta with dim(t, delta) = 1, located by bisection on the
    strictly increasing dimension formula (independent of the closed form)."""
    if not 0.0 < t < 1.0:
        raise DimensionDomain(f"t must lie in (0, 1), got {t}")
    lo, hi = 0.0, 1.0 - 1e-15
    # dim - 1 < 0 at lo (dim = t < 1) and > 0 near 1 (dim -> 2)
    while hi - lo > 1e-14:
        mid = 0.5 * (lo + hi)
        if astala_dimension(t, mid) < 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass
class DimensionProfile:
    t: float
    lambdas: np.ndarray
    dims: np.ndarray
    signs: List[CapacitySign]
    delta: float


def dimension_sweep(t: float, lambdas) -> DimensionProfile:
    lambdas = np.asarray(lambdas, dtype=float)
    dims = np.array([astala_dimension(t, l) for l in lambdas])
    signs = [capacity_sign_from_dimension(d) for d in dims]
    return DimensionProfile(t=t, lambdas=lambdas, dims=dims, signs=signs,
                            delta=critical_lambda(t) if 0 < t < 1 else float("nan"))


@dataclass
class DeductionRule:
    name: str
    statement: str
    consumes: List[str]
    conclusion: str


@dataclass
class NonharmonicityCertificate:
    t: float
    delta: float
    zero_samples: List[Tuple[float, float, CapacitySign]]
    positive_samples: List[Tuple[float, float, CapacitySign]]
    rules: List[DeductionRule]
    conclusions: List[str]

    def render(self) -> str:
        lines = ["non-harmonicity certificate",
                 f"t = {self.t:.17g}",
                 f"delta = {self.delta:.17g}", ""]
        lines.append("facts:")
        lines.append(f"  (a) threshold: dim(t, lambda) < 1 on [0, {self.delta:.17g}) "
                     f"and > 1 on ({self.delta:.17g}, 1)")
        for lam, dim, sign in self.zero_samples:
            lines.append(f"  (b) lambda = {lam:.17g}: dim = {dim:.17g} -> gamma {sign.value}")
        for lam, dim, sign in self.positive_samples:
            lines.append(f"  (c) lambda = {lam:.17g}: dim = {dim:.17g} -> gamma {sign.value}")
        lines.append("")
        lines.append("rules:")
        for r in self.rules:
            lines.append(f"  [{r.name}] {r.statement}")
            lines.append(f"    consumes: {', '.join(r.consumes)}")
            lines.append(f"    concludes: {r.conclusion}")
        lines.append("")
        lines.append("conclusions:")
        for c in self.conclusions:
            lines.append(f"  - {c}")
        return "\n".join(lines) + "\n"


def nonharmonicity_witness(t: float, sample_count: int = 5) -> NonharmonicityCertificate:
    """Symbolic certificate that log gamma(K_lambda) is neither subharmonic
    nor superharmonic, and gamma(K_lambda) is not superharmonic.

    Samples capacity signs on both sides of the threshold and discharges
    the four classical deduction rules against those facts.  Works entirely
    over CapacitySign; requires t in (0, 1) so a zero-capacity segment exists.
    """
    if not 0.0 < t < 1.0:
        raise DimensionDomain(
            f"t must lie in (0, 1) for a zero-capacity segment, got {t}")
    if sample_count < 3:
        raise ValueError("need sample_count >= 3")
    delta = critical_lambda(t)

    def describe(lam):
        dim = astala_dimension(t, lam)
        return (float(lam), float(dim), capacity_sign_from_dimension(dim))

    zero_samples = [describe(l) for l in np.linspace(0.0, delta, sample_count)[:-1]]
    positive_samples = [describe(l) for l in np.linspace(delta, 1.0, sample_count)[1:-1]]
    assert all(s is CapacitySign.ZERO for _, _, s in zero_samples)
    assert all(s is CapacitySign.POSITIVE for _, _, s in positive_samples)

    rules = [
        DeductionRule(
            name="dimension-capacity-dichotomy",
            statement=("A compact plane set of Hausdorff dimension below 1 has "
                       "zero analytic capacity; dimension above 1 forces "
                       "positive analytic capacity."),
            consumes=["(a)", "(b)", "(c)"],
            conclusion=(f"gamma(K_lambda) = 0 for lambda in [0, {delta:.17g}) and "
                        f"gamma(K_lambda) > 0 for lambda in ({delta:.17g}, 1); "
                        "hence log gamma(K_lambda) = -infinity on a segment "
                        "and finite elsewhere."),
        ),
        DeductionRule(
            name="superharmonic-functions-are-finite-below",
            statement="A superharmonic function never takes the value -infinity.",
            consumes=["dimension-capacity-dichotomy"],
            conclusion="log gamma(K_lambda) is not superharmonic.",
        ),
        DeductionRule(
            name="subharmonic-minus-infinity-propagation",
            statement=("A subharmonic function equal to -infinity on a line "
                       "segment is identically -infinity on its domain."),
            consumes=["dimension-capacity-dichotomy", "(c)"],
            conclusion=("log gamma(K_lambda) is finite on the positive-sign "
                        "samples, so it is not subharmonic."),
        ),
        DeductionRule(
            name="superharmonic-minimum-principle",
            statement=("A non-constant superharmonic function cannot attain "
                       "its minimum at an interior point."),
            consumes=["(b)", "(c)"],
            conclusion=("gamma(K_lambda) attains the interior minimum 0 on the "
                        "zero-sign segment while being positive elsewhere, so "
                        "gamma(K_lambda) is not superharmonic."),
        ),
    ]
    conclusions = [
        "log gamma(K_lambda) is neither subharmonic nor superharmonic.",
        "gamma(K_lambda) is not superharmonic.",
    ]
    return NonharmonicityCertificate(t=t, delta=delta, zero_samples=zero_samples,
                                     positive_samples=positive_samples,
                                     rules=rules, conclusions=conclusions)
