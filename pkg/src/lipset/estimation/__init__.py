"""
Oscillation estimation.

Computes rigorous enclosures of M_f(x, r) = sup{|f(x) − f(y)| : |x − y| ≤ r}/r
over geometric radius scans, giving finite-range surrogates of lip f and Lip f.
"""

from .models import LipEstimate, OscillationQuery, RadiusRow
from .estimator import (
    DEFAULT_RATIO,
    DEFAULT_REFINEMENT,
    LipEstimator,
    estimates_to_csv,
    lip_scan,
    m_f,
    scan_is_consistent,
    scan_radii,
)

__all__ = [
    "LipEstimate",
    "OscillationQuery",
    "RadiusRow",
    "DEFAULT_RATIO",
    "DEFAULT_REFINEMENT",
    "LipEstimator",
    "estimates_to_csv",
    "lip_scan",
    "m_f",
    "scan_is_consistent",
    "scan_radii",
]
