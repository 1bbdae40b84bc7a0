"""Exception hierarchy shared by all capmotion modules."""


class CapmotionError(Exception):
    """Base class for all library errors."""


class UnsupportedSet(CapmotionError):
    """The requested operation has no implementation for this set family."""


class OptimizerBudgetExceeded(CapmotionError):
    """The multistart optimizer produced no usable configuration within budget."""


class OutOfParameterDisk(CapmotionError):
    """A motion parameter lies outside the admissible disk |lambda| <= rho_max."""


class DomainViolation(CapmotionError):
    """A point lies inside a motion's excluded region."""


class QuadratureNonconvergence(CapmotionError):
    """Successive node doublings failed to reach the requested tolerance."""


class RadiusTooSmall(CapmotionError):
    """The quadrature circle does not enclose the base set / excluded region."""


class ZeroCoefficient(CapmotionError):
    """The extracted leading coefficient vanishes, contradicting conformality."""


class ZeroCapacityBase(CapmotionError):
    """The base set has zero capacity, so the propagation formula is vacuous."""


class GridTooSmall(CapmotionError):
    """The lambda grid has no interior points for the requested stencil."""


class InvalidBound(CapmotionError):
    """A supplied global bound is below the observed supremum."""


class DimensionDomain(CapmotionError):
    """Dimension-formula arguments outside their admissible ranges."""


class SchemaError(CapmotionError):
    """A scenario document does not conform to the configuration schema."""


class UnknownSetKind(SchemaError):
    """Unrecognized base-set tag in a scenario document."""


class UnknownMotionKind(SchemaError):
    """Unrecognized motion tag in a scenario document."""
