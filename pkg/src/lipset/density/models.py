"""
Density analysis models.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from ..errors import DensityError


class SosdVerdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class DensityRow:
    radius: Fraction
    left: Fraction
    right: Fraction

    @property
    def max_density(self) -> Fraction:
        return max(self.left, self.right)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "radius": str(self.radius),
            "left": str(self.left),
            "right": str(self.right),
            "max": str(self.max_density),
        }


@dataclass(frozen=True)
class DensityProfile:
    """
    One-sided densities of a set around a point, radii strictly decreasing.
    """

    point: Fraction
    rows: Tuple[DensityRow, ...] = ()

    def __post_init__(self) -> None:
        for prev, cur in zip(self.rows, self.rows[1:]):
            if cur.radius >= prev.radius:
                raise DensityError("profile radii must be strictly decreasing")

    def to_dict(self) -> Dict[str, Any]:
        return {"point": str(self.point), "rows": [r.to_dict() for r in self.rows]}


@dataclass
class SosdReport:
    """
    Finite-stage one-sided density diagnostic at a point.

    `min_max_density` is the exact minimum of max(left, right) over
    [r_min, r_max]; `worst_radius` attains it.
    """

    point: Fraction
    r_min: Fraction
    r_max: Fraction
    threshold: Fraction
    min_max_density: Fraction
    worst_radius: Fraction
    verdict: SosdVerdict
    radii_scanned: int
    candidates: List[Fraction] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.verdict is SosdVerdict.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": str(self.point),
            "r_min": str(self.r_min),
            "r_max": str(self.r_max),
            "threshold": str(self.threshold),
            "min_max_density": str(self.min_max_density),
            "worst_radius": str(self.worst_radius),
            "verdict": self.verdict.value,
            "radii_scanned": self.radii_scanned,
        }
