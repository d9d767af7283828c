"""
One-sided Lebesgue densities.

- Exact left/right densities and density profiles
- SOSD scan: exact minimum of the larger one-sided density over a radius range
"""

from .models import DensityProfile, DensityRow, SosdReport, SosdVerdict
from .analysis import (
    DEFAULT_RATIO,
    DEFAULT_THRESHOLD,
    critical_radii,
    density_profile,
    geometric_radii,
    left_density,
    right_density,
    sosd_scan,
)
from .export import profile_to_csv, profiles_to_csv, scans_to_csv

__all__ = [
    "DensityProfile",
    "DensityRow",
    "SosdReport",
    "SosdVerdict",
    "DEFAULT_RATIO",
    "DEFAULT_THRESHOLD",
    "critical_radii",
    "density_profile",
    "geometric_radii",
    "left_density",
    "right_density",
    "sosd_scan",
    "profile_to_csv",
    "profiles_to_csv",
    "scans_to_csv",
]
