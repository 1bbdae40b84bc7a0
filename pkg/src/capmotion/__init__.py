"""Analytic capacity under holomorphic motions.

Numerical library and CLI for tracking how the analytic capacity of a
compact plane set transforms under holomorphic motions that are conformal
off the base set: leading-coefficient extraction by contour quadrature,
harmonicity and Harnack diagnostics of log gamma over the parameter disk,
and the dimension phase-transition certificate showing that the conformality
hypothesis cannot be dropped.
"""

__version__ = "0.1.0"

from .coefficients import (LeadingCoefficient, QuadratureConfig,
                           capacity_under_motion, default_quadrature,
                           default_radius, leading_coefficient,
                           r_independence_check)
from .dimension import (CapacitySign, NonharmonicityCertificate,
                        astala_dimension, capacity_sign_from_dimension,
                        critical_lambda, critical_lambda_closed_form,
                        dimension_sweep, nonharmonicity_witness)
from .errors import (CapmotionError, DimensionDomain, DomainViolation,
                     GridTooSmall, InvalidBound, OptimizerBudgetExceeded,
                     OutOfParameterDisk, QuadratureNonconvergence,
                     RadiusTooSmall, SchemaError, UnknownMotionKind,
                     UnknownSetKind, UnsupportedSet, ZeroCapacityBase,
                     ZeroCoefficient)
from .motions import (CustomMotion, Identity, Joukowski, MotionAxiomReport,
                      Rebased, Scaled, ScaleRotate, Translation,
                      mobius_reparam, rebase, verify_motion_axioms)
from .scenario import (RunReport, Scenario, dimension_demo, parse_scenario,
                       run, serialize_scenario, validate_scenario)
from .sets import (CompactSet, Disk, Ellipse, FinitePointCloud, Segment,
                   analytic_capacity, boundary_points, is_connected,
                   support_radius, transfinite_diameter)
from .variation import (CapacityProfile, HarmonicityReport, LambdaGrid,
                        RadoReport, SubharmonicityReport, capacity_profile,
                        harmonicity_test, harnack_check, rado_criterion_check,
                        subharmonicity_test, superharmonicity_test,
                        synthetic_profile)
