"""
Interval-set algebra and Lebesgue measure.

All operations are pure and exact; every result is canonical.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import List, Optional, Sequence

from ..errors import IntervalError, NotClosedError, WindowError
from .models import (
    NEG_INF,
    POS_INF,
    ExtendedPoint,
    Interval,
    IntervalSet,
    Measure,
    interval_problem,
    is_finite,
    make_interval,
)


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def _touches(cur: Interval, nxt: Interval) -> bool:
    """True when nxt (sorted after cur) overlaps cur or shares a covered endpoint."""
    if nxt.lo < cur.hi:
        return True
    return nxt.lo == cur.hi and (cur.hi_closed or nxt.lo_closed)


def canonicalize(raw: Sequence[Interval]) -> IntervalSet:
    """
    Sort, absorb and merge raw intervals into the canonical IntervalSet.

    Membership of every point is preserved. Raises IntervalError naming the
    index of the first malformed interval.
    """
    for index, iv in enumerate(raw):
        problem = interval_problem(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed)
        if problem:
            raise IntervalError(problem, index=index)

    if not raw:
        return IntervalSet(())

    ordered = sorted(raw, key=lambda iv: (_sort_key(iv.lo), not iv.lo_closed))
    merged: List[Interval] = []
    cur = ordered[0]
    for nxt in ordered[1:]:
        if _touches(cur, nxt):
            if nxt.hi > cur.hi:
                hi, hi_closed = nxt.hi, nxt.hi_closed
            elif nxt.hi == cur.hi:
                hi, hi_closed = cur.hi, cur.hi_closed or nxt.hi_closed
            else:
                hi, hi_closed = cur.hi, cur.hi_closed
            lo_closed = cur.lo_closed or (nxt.lo == cur.lo and nxt.lo_closed)
            cur = Interval(cur.lo, hi, lo_closed, hi_closed)
        else:
            merged.append(cur)
            cur = nxt
    merged.append(cur)
    return IntervalSet(tuple(merged))


def _sort_key(p: ExtendedPoint):
    # infinities sort at the extremes; tuples keep comparisons homogeneous
    if p is NEG_INF:
        return (-1, Fraction(0))
    if p is POS_INF:
        return (1, Fraction(0))
    return (0, p)


# ---------------------------------------------------------------------------
# Boolean operations
# ---------------------------------------------------------------------------

def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    if not a:
        return b
    if not b:
        return a
    return canonicalize(list(a.parts) + list(b.parts))


def _intersect_intervals(x: Interval, y: Interval) -> Optional[Interval]:
    if x.lo > y.lo:
        lo, lo_closed = x.lo, x.lo_closed
    elif y.lo > x.lo:
        lo, lo_closed = y.lo, y.lo_closed
    else:
        lo, lo_closed = x.lo, x.lo_closed and y.lo_closed

    if x.hi < y.hi:
        hi, hi_closed = x.hi, x.hi_closed
    elif y.hi < x.hi:
        hi, hi_closed = y.hi, y.hi_closed
    else:
        hi, hi_closed = x.hi, x.hi_closed and y.hi_closed

    return make_interval(lo, hi, lo_closed, hi_closed)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out: List[Interval] = []
    i = j = 0
    pa, pb = a.parts, b.parts
    while i < len(pa) and j < len(pb):
        piece = _intersect_intervals(pa[i], pb[j])
        if piece is not None:
            out.append(piece)
        # advance whichever ends first (closed end reaches further on a tie)
        if pa[i].hi < pb[j].hi or (pa[i].hi == pb[j].hi and not pa[i].hi_closed):
            i += 1
        else:
            j += 1
    # pieces come out sorted and disjoint; adjacency is impossible between
    # intersections of two canonical sets, but canonicalize keeps that honest
    return canonicalize(out)


def complement(a: IntervalSet) -> IntervalSet:
    """Complement in the whole extended line."""
    out: List[Interval] = []
    prev_hi: ExtendedPoint = NEG_INF
    prev_closed = True  # -inf never belongs to the line, so the gap starts open
    for p in a.parts:
        gap = make_interval(prev_hi, p.lo, not prev_closed, not p.lo_closed)
        if gap is not None and not (prev_hi is NEG_INF and p.lo is NEG_INF):
            out.append(gap)
        prev_hi, prev_closed = p.hi, p.hi_closed
    if prev_hi is not POS_INF:
        out.append(Interval(prev_hi, POS_INF, not prev_closed and is_finite(prev_hi), False))
    return IntervalSet(tuple(out))


def complement_in(a: IntervalSet, window: Interval) -> IntervalSet:
    """window ∖ A."""
    return intersect(complement(a), IntervalSet((window,)))


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """A ∖ B."""
    if not a or not b:
        return a
    return intersect(a, complement(b))


def is_subset(a: IntervalSet, b: IntervalSet) -> bool:
    return not difference(a, b)


def contains(a: IntervalSet, x: Fraction) -> bool:
    i = bisect_right(a.los, x) - 1
    return i >= 0 and a.parts[i].contains(x)


def is_closed(a: IntervalSet) -> bool:
    return all(p.is_closed for p in a.parts)


# ---------------------------------------------------------------------------
# Measure
# ---------------------------------------------------------------------------

def measure(a: IntervalSet) -> Measure:
    total = Fraction(0)
    for p in a.parts:
        if not p.is_bounded:
            return POS_INF
        total += p.hi - p.lo  # type: ignore[operator]
    return total


def _clipped_length(p: Interval, lo: Fraction, hi: Fraction) -> Fraction:
    left = p.lo if p.lo > lo else lo
    right = p.hi if p.hi < hi else hi
    if right <= left:
        return Fraction(0)
    return right - left  # type: ignore[operator]


def measure_in(a: IntervalSet, window: Interval) -> Fraction:
    """
    |A ∩ window| for a bounded window.

    Logarithmic in the number of parts: whole parts come from prefix sums,
    only the two boundary parts are clipped.
    """
    if not window.is_bounded:
        raise WindowError(f"window {window} must have finite endpoints")
    lo: Fraction = window.lo  # type: ignore[assignment]
    hi: Fraction = window.hi  # type: ignore[assignment]
    if hi <= lo or not a:
        return Fraction(0)

    first = bisect_right(a.his, lo)  # first part ending after lo
    last = bisect_left(a.los, hi)  # parts [first, last) start before hi
    if first >= last:
        return Fraction(0)
    if last - first == 1:
        return _clipped_length(a.parts[first], lo, hi)

    total = _clipped_length(a.parts[first], lo, hi) + _clipped_length(a.parts[last - 1], lo, hi)
    total += a.cumulative[last - 1] - a.cumulative[first + 1]
    return total


# ---------------------------------------------------------------------------
# Metric and topology
# ---------------------------------------------------------------------------

def distance(x: Fraction, a: IntervalSet) -> Measure:
    """inf |x − y| over y ∈ A; 0 on the closure, +inf for the empty set."""
    if not a:
        return POS_INF
    i = bisect_right(a.los, x) - 1
    best: Measure = POS_INF
    if i >= 0:
        p = a.parts[i]
        if x <= p.hi:
            return Fraction(0)
        best = x - p.hi  # type: ignore[operator]
    if i + 1 < len(a.parts):
        gap = a.parts[i + 1].lo - x  # type: ignore[operator]
        if gap < best:
            best = gap
    return best


def contiguous_intervals(a: IntervalSet) -> List[Interval]:
    """The ordered open components of ℝ ∖ A, half-lines included."""
    if not is_closed(a):
        raise NotClosedError(f"contiguous intervals need a closed set, got {a}")
    return list(complement(a).parts)


def locate_contiguous(a: IntervalSet, x: Fraction) -> Optional[Interval]:
    """The contiguous interval of closed A containing x, or None for x ∈ A."""
    i = bisect_right(a.los, x) - 1
    if i >= 0 and x <= a.parts[i].hi:
        return None
    lo = a.parts[i].hi if i >= 0 else NEG_INF
    hi = a.parts[i + 1].lo if i + 1 < len(a.parts) else POS_INF
    return Interval(lo, hi, False, False)


# ---------------------------------------------------------------------------
# Affine maps
# ---------------------------------------------------------------------------

def scale_translate(a: IntervalSet, origin: Fraction, factor: Fraction) -> IntervalSet:
    """Image of A under t ↦ origin + factor·t (factor > 0)."""
    if factor <= 0:
        raise IntervalError("affine factor must be positive")

    def image(p: ExtendedPoint) -> ExtendedPoint:
        return p if not is_finite(p) else origin + factor * p  # type: ignore[operator]

    return IntervalSet(
        tuple(Interval(image(p.lo), image(p.hi), p.lo_closed, p.hi_closed) for p in a.parts)
    )
