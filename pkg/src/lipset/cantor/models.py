"""
Cantor construction models.

A stage is always described by its exact measure ledger and component
census; the geometry (open set, ℱ-components) is only kept when the
projected interval count stays under the materialization limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..errors import FormatError, ScheduleError, StageNotMaterializedError
from ..intervals import Interval, IntervalSet, complement_in
from ..utils.rationals import parse_rational

OPEN_RATIO = Fraction(9, 11)


@dataclass(frozen=True)
class LevelSchedule:
    """Levels l₁, l₂, … of successive generations and the removed-measure budget."""

    levels: Tuple[int, ...]
    budget: Fraction = Fraction(1, 2)

    def __post_init__(self) -> None:
        for n, level in enumerate(self.levels, start=1):
            if not isinstance(level, int) or isinstance(level, bool) or level < 1:
                raise ScheduleError(f"generation {n}: level must be a positive integer, got {level!r}")
        if not (0 < self.budget < 1):
            raise ScheduleError(f"budget must lie in (0, 1), got {self.budget}")

    def truncated(self, depth: int) -> "LevelSchedule":
        if depth > len(self.levels):
            raise ScheduleError(
                f"schedule has {len(self.levels)} levels, depth {depth} requested"
            )
        return LevelSchedule(self.levels[:depth], self.budget)

    def to_dict(self) -> Dict[str, Any]:
        return {"levels": list(self.levels), "budget": str(self.budget)}

    @classmethod
    def from_dict(cls, data: Any) -> "LevelSchedule":
        if not isinstance(data, dict) or not isinstance(data.get("levels"), list):
            raise FormatError('schedule must be an object with a "levels" list')
        return cls(
            levels=tuple(data["levels"]),
            budget=parse_rational(data.get("budget", "1/2")),
        )


def default_schedule(depth: int) -> LevelSchedule:
    """l_n = 4(n + 2), budget 1/2."""
    return LevelSchedule(tuple(4 * (n + 2) for n in range(1, depth + 1)), Fraction(1, 2))


@dataclass(frozen=True)
class FComponent:
    """
    Closed ℱ-component created at `generation` with tag `level`, inside the
    ℱ-component `window` of the previous generation.
    """

    interval: Interval
    level: int
    generation: int
    window: Interval

    @property
    def center(self) -> Fraction:
        return self.interval.midpoint

    @property
    def half_length(self) -> Fraction:
        return self.interval.length / 2  # type: ignore[operator]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lo": str(self.interval.lo),
            "hi": str(self.interval.hi),
            "level": self.level,
            "generation": self.generation,
            "window_lo": str(self.window.lo),
            "window_hi": str(self.window.hi),
        }


@dataclass(frozen=True)
class ComponentClass:
    generation: int
    level: int
    length: Fraction
    count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generation": self.generation,
            "level": self.level,
            "length": str(self.length),
            "count": self.count,
        }


@dataclass(frozen=True)
class LedgerEntry:
    generation: int
    level: int
    removed: Fraction
    complement: Fraction
    components: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generation": self.generation,
            "level": self.level,
            "removed": str(self.removed),
            "complement": str(self.complement),
            "components": self.components,
        }


@dataclass
class MeasureLedger:
    """Exact per-generation removed measure |G_n| and running complement."""

    window_length: Fraction
    entries: List[LedgerEntry] = field(default_factory=list)

    @property
    def removed(self) -> Fraction:
        return sum((e.removed for e in self.entries), Fraction(0))

    @property
    def complement(self) -> Fraction:
        return self.window_length - self.removed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "window_length": str(self.window_length),
            "removed": str(self.removed),
            "complement": str(self.complement),
            "generations": [e.to_dict() for e in self.entries],
        }


@dataclass
class CantorStage:
    """
    Finite stage of the positive-measure Cantor-type set.

    The closed set of the stage is window ∖ accumulated_open.
    """

    depth: int
    schedule: LevelSchedule
    window: Interval
    ledger: MeasureLedger
    census: List[ComponentClass]
    projected_parts: int
    _open: Optional[IntervalSet] = field(default=None, repr=False)
    _components: Optional[List[FComponent]] = field(default=None, repr=False)

    @property
    def materialized(self) -> bool:
        return self._open is not None

    def _require(self) -> None:
        if not self.materialized:
            raise StageNotMaterializedError(
                f"stage of depth {self.depth} has {self.projected_parts} projected parts "
                "and was built ledger-only"
            )

    @property
    def accumulated_open(self) -> IntervalSet:
        self._require()
        return self._open  # type: ignore[return-value]

    @property
    def f_components(self) -> List[FComponent]:
        """ℱ-components of the final generation."""
        self._require()
        return self._components  # type: ignore[return-value]

    @property
    def closed_set(self) -> IntervalSet:
        return complement_in(self.accumulated_open, self.window)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "depth": self.depth,
            "schedule": self.schedule.to_dict(),
            "window": {"lo": str(self.window.lo), "hi": str(self.window.hi)},
            "materialized": self.materialized,
            "projected_parts": self.projected_parts,
            "ledger": self.ledger.to_dict(),
            "census": [c.to_dict() for c in self.census],
        }


@dataclass(frozen=True)
class WindowCheckRow:
    component: Interval
    level: int
    x: Fraction
    side: str
    density: Fraction


@dataclass
class DensityWindowReport:
    mode: str
    rows: List[WindowCheckRow] = field(default_factory=list)

    @property
    def max_density(self) -> Fraction:
        return max((row.density for row in self.rows), default=Fraction(0))

    @property
    def passed(self) -> bool:
        return self.max_density <= Fraction(1, 2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "checked": len(self.rows),
            "max_density": str(self.max_density),
            "passed": self.passed,
        }


@dataclass
class GapCheck:
    """ℱ-components whose 7t-neighborhood gaps are not open where required."""

    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class FullMeasureStage:
    """
    Tiled assembly of Cantor stages with disjoint closed sets.

    `excluded[j]` lists the shared endpoints dropped from tile j's set.
    """

    window: Interval
    epsilon: Fraction
    copies: int
    depth: int
    tiles: List[CantorStage]
    excluded: List[Tuple[Fraction, ...]]

    @property
    def uncovered(self) -> Fraction:
        return sum((t.ledger.removed for t in self.tiles), Fraction(0))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "window": {"lo": str(self.window.lo), "hi": str(self.window.hi)},
            "epsilon": str(self.epsilon),
            "copies": self.copies,
            "depth": self.depth,
            "uncovered": str(self.uncovered),
            "tiles": [t.to_dict() for t in self.tiles],
            "excluded": [[str(p) for p in ex] for ex in self.excluded],
        }
