from __future__ import annotations

from typing import Iterable, Optional

from ..utils.tables import render_csv
from .models import DensityProfile, SosdReport

PROFILE_HEADER = ("x", "r", "left", "right", "max")
SCAN_HEADER = (
    "x",
    "r_min",
    "r_max",
    "threshold",
    "min_max_density",
    "worst_radius",
    "verdict",
    "radii_scanned",
)


def profile_to_csv(profile: DensityProfile, decimals: Optional[int] = None) -> str:
    return profiles_to_csv([profile], decimals)


def profiles_to_csv(profiles: Iterable[DensityProfile], decimals: Optional[int] = None) -> str:
    rows = [
        (p.point, r.radius, r.left, r.right, r.max_density) for p in profiles for r in p.rows
    ]
    dec = ("left", "right", "max") if decimals else ()
    return render_csv(PROFILE_HEADER, rows, dec, decimals)


def scans_to_csv(reports: Iterable[SosdReport], decimals: Optional[int] = None) -> str:
    rows = [
        (
            rep.point,
            rep.r_min,
            rep.r_max,
            rep.threshold,
            rep.min_max_density,
            rep.worst_radius,
            rep.verdict.value,
            rep.radii_scanned,
        )
        for rep in reports
    ]
    dec = ("min_max_density",) if decimals else ()
    return render_csv(SCAN_HEADER, rows, dec, decimals)
