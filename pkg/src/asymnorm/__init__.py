"""Proper asymmetric norms as gauges of polyhedral cones.

Submodules:

- `numeric`     vectors, tolerances, dense two-phase simplex
- `cone`        halfspace / generator cones and their predicates
- `gauge`       cone gauges, black-box functionals, axiom checks
- `properness`  sampled checks of the proper-norm characterisations
- `retraction`  the retraction pair R x = q(x) u, Q = I - R, and its audit
- `oracle`      bisection gauge and reference fixtures
- `cli`         command-line entry point
"""
from .numeric import (FEAS_TOL, REL_TOL, DimensionError, LpProblem, LpSolution,
                      LpStalled, as_vector, dot, lp_solve)
from .cone import (ConeFormatError, ConeOrderWitness, GeneratorCone, HalfspaceCone,
                   NotFullDimensional, contains, eliminate_redundancy, interior_point,
                   is_pointed, is_proper_cone, leq_cone, load_cone, on_boundary)
from .gauge import (ApexNotInterior, FunctionalHandle, GaugeNorm, check_axioms,
                    euclidean_norm, gauge_eval, gauge_eval_oracle, kernel_contains,
                    linear_functional, sphere_sample, symmetrize, unit_ball_contains)
from .properness import (ApexError, PropernessReport, check_condition_i,
                         check_condition_ii, check_condition_iii, verify_equivalence)
from .retraction import (ConeNotProper, OperatorPair, RetractionPair, apply_Q, apply_R,
                         audit_retraction, build_pair, subadditivity_certificate)
from .oracle import Fixture, fixture_suite, gauge_by_bisection

__version__ = "0.1.0"
