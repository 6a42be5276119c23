"""Multi-point Schwarz-Pick machinery for bounded analytic functions on the unit disk."""

from .bounds import (
    dieudonne_region,
    distance_bound_chain,
    modulus_bound_chain,
    two_sided_modulus_bounds,
    value_region,
)
from .exceptions import *  # noqa: F401,F403
from .functions import (
    AnalyticFn,
    blaschke,
    constant,
    eval_jet,
    identity,
    polynomial,
    schur_chain,
    validate_bounded,
)
from .geometry import ClosedDisk, MobiusMap, bracket, disk_image, hyperbolic_distance
from .hdq import SchurSequence, SchurStatus, delta, gamma_sequence, iterated, schur_classic
from .jets import Jet
from .peschl import gamma_from_taylor, peschl
from .pick import (
    FeasibilityStatus,
    InterpolationData,
    construct_interpolant,
    feasibility,
    variability_region,
)

__version__ = "0.1.0"
