"""
Construction models: nested chains and breakpoint rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..intervals import IntervalSet
from ..intervals.codec import set_to_dict
from ..utils.rationals import floor_pow2


@dataclass(frozen=True)
class NestedChain:
    """
    Closed sets E₁ ⊆ E₂ ⊆ … ⊆ E_N with E₁ nonempty.

    Build through `validate_chain` or `nest_chain`; E₀ is the empty set and
    E_n is E_N for every n > N.
    """

    stages: Tuple[IntervalSet, ...]

    @property
    def depth(self) -> int:
        return len(self.stages)

    @property
    def final(self) -> IntervalSet:
        return self.stages[-1]

    def stage(self, n: int) -> IntervalSet:
        if n <= 0:
            return IntervalSet.empty()
        return self.stages[min(n, self.depth) - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {"stages": [set_to_dict(s) for s in self.stages]}


@dataclass(frozen=True)
class BreakpointRule:
    """
    Step rule for breakpoint streams.

    With offset g = a_k − a the next step is factor·min{2^-n g², 2^-n, g},
    rounded down to a power of two when `dyadic` is set.
    """

    factor: Fraction = Fraction(1, 4)
    dyadic: bool = True

    def step(self, level: int, g: Fraction) -> Fraction:
        scale = Fraction(1, 2**level)
        raw = self.factor * min(scale * g * g, scale, g)
        if self.dyadic and raw > 0:
            return floor_pow2(raw)
        return raw

    def to_dict(self) -> Dict[str, Any]:
        return {"factor": str(self.factor), "dyadic": self.dyadic}


DEFAULT_RULE = BreakpointRule()


@dataclass(frozen=True)
class BreakpointRun:
    """Offsets g_{start+j} = start_offset − j·step for j = 0..length."""

    start_index: int
    start_offset: Fraction
    step: Fraction
    length: int

    @property
    def end_index(self) -> int:
        return self.start_index + self.length

    @property
    def end_offset(self) -> Fraction:
        return self.start_offset - self.length * self.step


@dataclass
class ConditionCheck:
    """First violated breakpoint condition, if any."""

    checked: int
    condition: Optional[str] = None
    index: Optional[int] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.condition is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "checked": self.checked,
            "ok": self.ok,
            "condition": self.condition,
            "index": self.index,
            "detail": self.detail,
        }


@dataclass
class CertificateReport:
    """Pairs violating |f(a) − f(b)| ≤ |[a, b] ∩ E|."""

    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {"checked": self.checked, "passed": self.passed, "violations": self.violations}


@dataclass
class EnvelopeReport:
    """Points/levels violating 0 ≤ f_n(x) ≤ min{2^-n, 2^-n·d²(x, E_{n−1})}."""

    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {"checked": self.checked, "passed": self.passed, "violations": self.violations}
