"""
Oscillation estimation models.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from ..errors import EstimationError


@dataclass(frozen=True)
class OscillationQuery:
    """
    One M_f(x, r) evaluation: `refinement` grid steps on each side of x.
    """

    x: Fraction
    r: Fraction
    refinement: int = 64

    def __post_init__(self) -> None:
        if self.r <= 0:
            raise EstimationError(f"radius must be positive, got {self.r}")
        if self.refinement < 2:
            raise EstimationError(f"refinement must be at least 2, got {self.refinement}")

    @property
    def step(self) -> Fraction:
        return self.r / self.refinement

    @property
    def slack(self) -> Fraction:
        """upper − lower: grid points are step/2 apart from any y, f is 1-Lipschitz."""
        return Fraction(1, 2 * self.refinement)


@dataclass(frozen=True)
class RadiusRow:
    r: Fraction
    lower: Fraction
    upper: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {"r": str(self.r), "lower": str(self.lower), "upper": str(self.upper)}


@dataclass
class LipEstimate:
    """
    Finite-range enclosures of lip f(x) (min over radii) and Lip f(x) (max).
    """

    x: Fraction
    r_min: Fraction
    r_max: Fraction
    ratio: Fraction
    refinement: int
    lip_lower: Fraction
    lip_upper: Fraction
    Lip_lower: Fraction
    Lip_upper: Fraction
    rows: List[RadiusRow] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "x": str(self.x),
            "r_min": str(self.r_min),
            "r_max": str(self.r_max),
            "ratio": str(self.ratio),
            "refinement": self.refinement,
            "lip_lower": str(self.lip_lower),
            "lip_upper": str(self.lip_upper),
            "Lip_lower": str(self.Lip_lower),
            "Lip_upper": str(self.Lip_upper),
            "rows": [row.to_dict() for row in self.rows],
        }
