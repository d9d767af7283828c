"""
The function f = Σ f_n built from a nested chain, evaluated exactly.

f₁(x) = |[0, x] ∩ E₁| (mirrored for x < 0). For n ≥ 2, f_n vanishes on
E_{n−1}; inside a contiguous interval (a, b) of E_{n−1} it is a zig-zag over
the cells cut by the level-n breakpoint stream:

    f_n(x) = min(|(lo, x) ∩ E_n|, |(x, hi) ∩ E_n|)   for x in the cell (lo, hi)
"""

from __future__ import annotations

import logging
import math
import threading
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ChainError
from ..intervals import (
    Interval,
    IntervalSet,
    contains,
    distance,
    intersect,
    is_finite,
    locate_contiguous,
    measure,
    measure_in,
)
from ..utils.tables import render_csv
from .breakpoints import BreakpointStream
from .models import (
    DEFAULT_RULE,
    BreakpointRule,
    CertificateReport,
    EnvelopeReport,
    NestedChain,
)

logger = logging.getLogger("lipset.construction")


class LipFunction:
    """
    Exact evaluator for f = Σ_{n≤N} f_n over a validated chain.

    Breakpoint streams are memoized per (level, contiguous interval) and
    shared between threads.
    """

    def __init__(
        self,
        chain: NestedChain,
        rule: BreakpointRule = DEFAULT_RULE,
        tolerance: Optional[Fraction] = None,
    ) -> None:
        self.chain = chain
        self.rule = rule
        self.tolerance = tolerance
        self._streams: Dict[Tuple[int, Interval], BreakpointStream] = {}
        self._occupied: Dict[Tuple[int, Interval], bool] = {}
        self._lock = threading.Lock()

    @property
    def depth(self) -> int:
        return self.chain.depth

    def stream(self, level: int, interval: Interval) -> BreakpointStream:
        key = (level, interval)
        with self._lock:
            s = self._streams.get(key)
            if s is None:
                s = BreakpointStream(interval, level, self.rule)
                self._streams[key] = s
            return s

    def _stage_meets(self, level: int, interval: Interval) -> bool:
        key = (level, interval)
        with self._lock:
            hit = self._occupied.get(key)
        if hit is None:
            piece = intersect(self.chain.stage(level), IntervalSet((interval,)))
            hit = measure(piece) != 0
            with self._lock:
                self._occupied[key] = hit
        return hit

    def __call__(self, x: Fraction) -> Fraction:
        return eval_f(self, x)

    def __repr__(self) -> str:
        return f"LipFunction(depth={self.depth}, rule={self.rule})"


def eval_f1(chain: NestedChain, x: Fraction) -> Fraction:
    x = Fraction(x)
    e1 = chain.stage(1)
    if x >= 0:
        return measure_in(e1, Interval.closed(0, x))
    return measure_in(e1, Interval.closed(x, 0))


def _cell_value(stage: IntervalSet, lo: Fraction, x: Fraction, hi: Fraction) -> Fraction:
    left = measure_in(stage, Interval.closed(lo, x))
    right = measure_in(stage, Interval.closed(x, hi))
    return min(left, right)


def _cell(f: LipFunction, level: int, iv: Interval, x: Fraction) -> Tuple[Fraction, Fraction]:
    """The breakpoint cell of `iv` containing x (x not on the cell's open end)."""
    h = Fraction(1, 2**level)
    a, b = iv.lo, iv.hi
    if is_finite(a) and (not is_finite(b) or x <= iv.midpoint):
        d = x - a  # type: ignore[operator]
        if not is_finite(b) and d > 1:
            k = math.ceil((d - 1) / h)
            return a + 1 + (k - 1) * h, a + 1 + k * h  # type: ignore[operator]
        stream = f.stream(level, iv)
        k = stream.bracket(d)
        return a + stream.offset(k), a + stream.offset(k - 1)  # type: ignore[operator]

    d = b - x  # type: ignore[operator]
    if not is_finite(a) and d > 1:
        k = math.ceil((d - 1) / h)
        return b - 1 - k * h, b - 1 - (k - 1) * h  # type: ignore[operator]
    stream = f.stream(level, iv)
    k = stream.bracket(d)
    return b - stream.offset(k - 1), b - stream.offset(k)  # type: ignore[operator]


def eval_fn(level: int, f: LipFunction, x: Fraction) -> Fraction:
    """Exact f_n(x)."""
    if level < 1:
        raise ChainError("function level must be positive", stage=level)
    x = Fraction(x)
    if level > f.depth:
        return Fraction(0)
    if level == 1:
        return eval_f1(f.chain, x)

    previous = f.chain.stage(level - 1)
    iv = locate_contiguous(previous, x)
    if iv is None:
        return Fraction(0)
    if not f._stage_meets(level, iv):
        return Fraction(0)
    lo, hi = _cell(f, level, iv, x)
    return _cell_value(f.chain.stage(level), lo, x, hi)


def active_levels(f: LipFunction) -> List[int]:
    """Levels summed by eval_f; levels with 2^-n below the tolerance are skipped."""
    levels = list(range(1, f.depth + 1))
    if f.tolerance is None:
        return levels
    return [n for n in levels if n == 1 or Fraction(1, 2**n) >= f.tolerance]


def eval_f(f: LipFunction, x: Fraction) -> Fraction:
    x = Fraction(x)
    return sum((eval_fn(n, f, x) for n in active_levels(f)), Fraction(0))


# ---------------------------------------------------------------------------
# Supplementary queries
# ---------------------------------------------------------------------------

def stage_of(chain: NestedChain, x: Fraction) -> Optional[int]:
    """Least n with x ∈ E_n, or None when x is outside E_N."""
    x = Fraction(x)
    for n, stage in enumerate(chain.stages, start=1):
        if contains(stage, x):
            return n
    return None


def expected_lip(chain: NestedChain, x: Fraction) -> int:
    """The value lip f(x) must take: the indicator of E_N."""
    return 1 if contains(chain.final, Fraction(x)) else 0


def constancy_radius(f: LipFunction, x: Fraction) -> Fraction:
    """
    d(x, E_N) for x outside E_N (f is constant on that open ball), else 0.
    """
    x = Fraction(x)
    if contains(f.chain.final, x):
        return Fraction(0)
    return distance(x, f.chain.final)  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def lipschitz_certificate(
    f: LipFunction, pairs: Iterable[Tuple[Fraction, Fraction]]
) -> CertificateReport:
    """Check |f(a) − f(b)| ≤ |[a, b] ∩ E_N| for every pair."""
    report = CertificateReport()
    final = f.chain.final
    for a, b in pairs:
        a, b = Fraction(a), Fraction(b)
        lo, hi = (a, b) if a <= b else (b, a)
        lhs = abs(eval_f(f, a) - eval_f(f, b))
        rhs = measure_in(final, Interval.closed(lo, hi))
        report.checked += 1
        if lhs > rhs:
            report.violations.append(
                {"a": str(a), "b": str(b), "difference": str(lhs), "measure": str(rhs)}
            )
    if report.violations:
        logger.warning("Lipschitz certificate: %d violations", len(report.violations))
    return report


def envelope_check(f: LipFunction, points: Iterable[Fraction]) -> EnvelopeReport:
    """Check 0 ≤ f_n(x) ≤ min{2^-n, 2^-n·d²(x, E_{n−1})} for 2 ≤ n ≤ N."""
    report = EnvelopeReport()
    for x in points:
        x = Fraction(x)
        for n in range(2, f.depth + 1):
            value = eval_fn(n, f, x)
            scale = Fraction(1, 2**n)
            d = distance(x, f.chain.stage(n - 1))
            bound = min(scale, scale * d * d)  # type: ignore[operator]
            report.checked += 1
            if not (0 <= value <= bound):
                report.violations.append(
                    {"x": str(x), "level": n, "value": str(value), "bound": str(bound)}
                )
    return report


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def evaluations_to_csv(
    f: LipFunction, points: Sequence[Fraction], decimals: Optional[int] = 12
) -> str:
    rows = [(x, eval_f(f, x)) for x in points]
    dec = ("f",) if decimals else ()
    return render_csv(("x", "f"), rows, dec, decimals)
