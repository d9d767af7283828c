from .errors import ErrorCode, LipsetError

from .intervals import (
    NEG_INF,
    POS_INF,
    Interval,
    IntervalSet,
    canonicalize,
    complement,
    contiguous_intervals,
    distance,
    intersect,
    measure,
    measure_in,
    union,
)
from .density import density_profile, left_density, right_density, sosd_scan
from .construction import (
    BreakpointRule,
    BreakpointStream,
    LipFunction,
    NestedChain,
    eval_f,
    lipschitz_certificate,
    validate_chain,
)
from .estimation import LipEstimator, lip_scan, m_f
from .cantor import (
    LevelSchedule,
    build_f_infinity,
    build_full_measure_sosd,
    density_window_check,
    level1_open,
    levelk_open,
)
from .verification import VerificationReport, run_suite

__version__ = "0.3.0"

__all__ = [
    # Errors
    "ErrorCode",
    "LipsetError",

    # Interval sets
    "NEG_INF",
    "POS_INF",
    "Interval",
    "IntervalSet",
    "canonicalize",
    "complement",
    "contiguous_intervals",
    "distance",
    "intersect",
    "measure",
    "measure_in",
    "union",

    # Densities
    "density_profile",
    "left_density",
    "right_density",
    "sosd_scan",

    # Construction
    "BreakpointRule",
    "BreakpointStream",
    "LipFunction",
    "NestedChain",
    "eval_f",
    "lipschitz_certificate",
    "validate_chain",

    # Estimation
    "LipEstimator",
    "lip_scan",
    "m_f",

    # Cantor lab
    "LevelSchedule",
    "build_f_infinity",
    "build_full_measure_sosd",
    "density_window_check",
    "level1_open",
    "levelk_open",

    # Verification
    "VerificationReport",
    "run_suite",
]
