"""
Lazily generated breakpoint streams.

A stream lives in one contiguous interval (a, b) at one level n. It produces
offsets g₀ > g₁ > … > 0 measured from its anchor (a, or b when a = −∞);
the breakpoints are a_k = anchor ± g_k. Runs of equal steps are stored in
compressed form so locating the cell of a query offset is one bisection
plus one division, however many breakpoints precede it.
"""

from __future__ import annotations

import logging
import threading
from bisect import bisect_right
from fractions import Fraction
from typing import List

from ..errors import BreakpointRuleError, ChainError
from ..intervals import Interval, is_finite
from .models import DEFAULT_RULE, BreakpointRule, BreakpointRun, ConditionCheck

logger = logging.getLogger("lipset.construction")


class BreakpointStream:
    """
    Breakpoints of level `level` inside the open interval `interval`.

    Thread safe; extension is idempotent, so concurrent readers always see
    the same prefix.
    """

    def __init__(
        self, interval: Interval, level: int, rule: BreakpointRule = DEFAULT_RULE
    ) -> None:
        if level < 1:
            raise ChainError("breakpoint level must be positive", stage=level)
        if is_finite(interval.lo):
            self.anchor: Fraction = interval.lo  # type: ignore[assignment]
            self.direction = 1
            g0 = interval.length / 2 if interval.is_bounded else Fraction(1)
        elif is_finite(interval.hi):
            self.anchor = interval.hi  # type: ignore[assignment]
            self.direction = -1
            g0 = Fraction(1)
        else:
            raise BreakpointRuleError("the whole line has no breakpoint anchor")

        self.interval = interval
        self.level = level
        self.rule = rule
        self.g0: Fraction = g0  # type: ignore[assignment]
        self.cursor = 0

        self._runs: List[BreakpointRun] = []
        self._run_starts: List[int] = []
        self._neg_run_ends: List[Fraction] = []
        self._lock = threading.Lock()

    # ------------------------------------------------------------------
    # Generation
    # ------------------------------------------------------------------
    @property
    def generated(self) -> int:
        """Number of offsets after g₀ generated so far."""
        return self._runs[-1].end_index if self._runs else 0

    @property
    def last_offset(self) -> Fraction:
        return self._runs[-1].end_offset if self._runs else self.g0

    def _step_at(self, g: Fraction) -> Fraction:
        s = self.rule.step(self.level, g)
        if s <= 0:
            raise BreakpointRuleError(f"rule gave non-positive step {s} at offset {g}")
        if g - s <= 0:
            raise BreakpointRuleError(
                f"rule step {s} at offset {g} leaves the contiguous interval {self.interval}"
            )
        return s

    def _run_length(self, g: Fraction, s: Fraction) -> int:
        def same(j: int) -> bool:
            h = g - j * s
            return h - s > 0 and self.rule.step(self.level, h) == s

        lo, hi = 0, 1
        while same(hi):
            lo, hi = hi, hi * 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if same(mid):
                lo = mid
            else:
                hi = mid
        return lo + 1

    def _extend_once(self) -> None:
        g = self.last_offset
        s = self._step_at(g)
        run = BreakpointRun(self.generated, g, s, self._run_length(g, s))
        self._runs.append(run)
        self._run_starts.append(run.start_index)
        self._neg_run_ends.append(-run.end_offset)
        logger.debug(
            "level %d stream in %s: run of %d steps of %s (now %d breakpoints)",
            self.level,
            self.interval,
            run.length,
            run.step,
            run.end_index + 1,
        )

    def ensure_index(self, k: int) -> None:
        with self._lock:
            while self.generated < k:
                self._extend_once()

    def ensure_below(self, d: Fraction) -> None:
        with self._lock:
            while self.last_offset >= d:
                self._extend_once()

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------
    def offset(self, k: int) -> Fraction:
        """g_k = |a_k − anchor|."""
        if k < 0:
            raise IndexError(k)
        if k == 0:
            return self.g0
        self.ensure_index(k)
        i = bisect_right(self._run_starts, k - 1) - 1
        run = self._runs[i]
        return run.start_offset - (k - run.start_index) * run.step

    def breakpoint(self, k: int) -> Fraction:
        return self.anchor + self.direction * self.offset(k)

    def bracket(self, d: Fraction) -> int:
        """
        Index k ≥ 1 with g_k < d ≤ g_{k−1}, for 0 < d ≤ g₀.
        """
        if not (0 < d <= self.g0):
            raise BreakpointRuleError(f"offset {d} is outside (0, {self.g0}]")
        self.ensure_below(d)
        # runs are ordered by decreasing end offset
        i = bisect_right(self._neg_run_ends, -d)
        run = self._runs[i]
        j = (run.start_offset - d) // run.step + 1
        return run.start_index + int(j)

    def __repr__(self) -> str:
        return (
            f"BreakpointStream(interval={self.interval}, level={self.level}, "
            f"generated={self.generated})"
        )


def next_breakpoint(stream: BreakpointStream) -> Fraction:
    """Hand out a₀, a₁, … in order."""
    k = stream.cursor
    value = stream.breakpoint(k)
    stream.cursor = k + 1
    return value


def breakpoint_conditions(stream: BreakpointStream, count: int) -> ConditionCheck:
    """
    Check the start condition (I), the step bound (II) and strict decrease
    toward the anchor (III) for a₀ … a_count, stopping at the first failure.
    """
    n = stream.level
    scale = Fraction(1, 2**n)
    iv = stream.interval
    if iv.is_bounded:
        expected = iv.midpoint
    else:
        expected = stream.anchor + stream.direction
    if stream.breakpoint(0) != expected:
        return ConditionCheck(0, "(I)", 0, f"a_0 = {stream.breakpoint(0)}, expected {expected}")

    prev = stream.g0
    for k in range(1, count + 1):
        try:
            g = stream.offset(k)
        except BreakpointRuleError as e:
            return ConditionCheck(k - 1, "(III)", k, str(e))
        if not (0 < g < prev):
            return ConditionCheck(k - 1, "(III)", k, f"offset {g} after {prev}")
        step = prev - g
        bound = min(scale * g * g, scale)
        if not step < bound:
            return ConditionCheck(
                k - 1, "(II)", k, f"a_{k-1} - a_{k} = {step} is not below {bound}"
            )
        prev = g
    return ConditionCheck(count)
