"""
Level-k open sets of the 3/11–4/11–7/11–8/11 pattern.

Inside an interval (a, b) of length L the level-1 open set is

    (a, a+3L/11) ∪ (a+4L/11, a+7L/11) ∪ (a+8L/11, b)

and level k applies the same pattern inside every open piece of level k−1.
The closed gaps [3/11, 4/11] and [7/11, 8/11] created at refinement step m
are the ℱ-components with tag m.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from ..errors import IntervalError, InfeasibleBudgetError, ScheduleError
from ..intervals import (
    Interval,
    IntervalSet,
    canonicalize,
    complement_in,
    is_subset,
)
from .models import OPEN_RATIO, GapCheck

_CUTS = (Fraction(3, 11), Fraction(4, 11), Fraction(7, 11), Fraction(8, 11))

TaggedComponent = Tuple[Interval, int]


def _check_bounds(a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise IntervalError(f"pattern needs a < b, got a={a}, b={b}")
    return a, b


def _split(a: Fraction, b: Fraction) -> Tuple[List[Tuple[Fraction, Fraction]], List[Interval]]:
    length = b - a
    c1, c2, c3, c4 = (a + length * c for c in _CUTS)
    pieces = [(a, c1), (c2, c3), (c4, b)]
    gaps = [Interval.closed(c1, c2), Interval.closed(c3, c4)]
    return pieces, gaps


def level_pattern(
    a: Fraction, b: Fraction, k: int
) -> Tuple[List[Interval], List[TaggedComponent]]:
    """
    Open pieces of the level-k set of (a, b) and its tagged ℱ-components,
    both sorted by position.
    """
    a, b = _check_bounds(a, b)
    if k < 0:
        raise ScheduleError(f"level must be non-negative, got {k}")
    pieces = [(a, b)]
    tagged: List[TaggedComponent] = []
    for m in range(1, k + 1):
        refined: List[Tuple[Fraction, Fraction]] = []
        for lo, hi in pieces:
            sub, gaps = _split(lo, hi)
            refined.extend(sub)
            tagged.extend((g, m) for g in gaps)
        pieces = refined
    tagged.sort(key=lambda item: item[0].lo)
    return [Interval.open(lo, hi) for lo, hi in pieces], tagged


def levelk_open(a: Fraction, b: Fraction, k: int) -> IntervalSet:
    pieces, _ = level_pattern(a, b, k)
    return canonicalize(pieces)


def level1_open(a: Fraction, b: Fraction) -> IntervalSet:
    return levelk_open(a, b, 1)


def level_measure(k: int) -> Fraction:
    """Relative measure (9/11)^k of the level-k open set."""
    return OPEN_RATIO**k


def component_tag(component: Interval, window: Interval) -> Optional[int]:
    """
    Least m such that `component` is an ℱ-component of the level-m open set
    of the window, or None.
    """
    a, b = window.lo, window.hi
    lo, hi = component.lo, component.hi
    m = 0
    while True:
        m += 1
        length = b - a  # type: ignore[operator]
        if hi - lo > length / 11:  # type: ignore[operator]
            return None
        pieces, gaps = _split(a, b)  # type: ignore[arg-type]
        for g in gaps:
            if g.lo == lo and g.hi == hi:
                return m
        for p_lo, p_hi in pieces:
            if p_lo <= lo and hi <= p_hi:  # type: ignore[operator]
                a, b = p_lo, p_hi
                break
        else:
            return None


def f_components(g: IntervalSet, window: Interval) -> List[TaggedComponent]:
    """Nondegenerate closed components of window ∖ G with their level tags."""
    if not is_subset(g, IntervalSet((window,))):
        raise IntervalError(f"open set is not contained in the window {window}")
    out: List[TaggedComponent] = []
    for part in complement_in(g, window):
        if part.is_degenerate:
            continue
        out.append((part, component_tag(part, window)))  # type: ignore[arg-type]
    return out


def minimal_level(ratio: Fraction, max_level: Optional[int] = None) -> int:
    """Least l ≥ 1 with (9/11)^l ≤ ratio."""
    ratio = Fraction(ratio)
    if ratio <= 0:
        raise ScheduleError(f"ratio must be positive, got {ratio}")
    level, value = 1, OPEN_RATIO
    while value > ratio:
        level += 1
        value *= OPEN_RATIO
    if max_level is not None and level > max_level:
        raise InfeasibleBudgetError(
            f"ratio {ratio} needs level {level}, above the cap {max_level}", [level]
        )
    return level


def neighbor_gaps_open(a: Fraction, b: Fraction, k: int) -> GapCheck:
    """
    For every ℱ-component [p−t, p+t] with tag m of the level-k set, check
    that (p−7t, p−t) ∪ (p+t, p+7t) lies in the level-m open set.
    """
    a, b = _check_bounds(a, b)
    _, tagged = level_pattern(a, b, k)
    by_level = {m: levelk_open(a, b, m) for m in range(1, k + 1)}
    report = GapCheck()
    for comp, m in tagged:
        p = comp.midpoint
        t = comp.length / 2  # type: ignore[operator]
        neighborhood = canonicalize(
            [Interval.open(p - 7 * t, p - t), Interval.open(p + t, p + 7 * t)]
        )
        report.checked += 1
        if not is_subset(neighborhood, by_level[m]):
            report.failures.append({"lo": str(comp.lo), "hi": str(comp.hi), "level": m})
    return report

