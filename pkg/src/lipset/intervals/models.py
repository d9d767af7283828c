"""
Interval data models.

Points are plain `Fraction` values; the two infinities are singletons that
compare correctly against any rational. Intervals track both endpoint flags
so that topology (closedness, isolated points) is exact, not just measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Optional, Tuple, Union

from ..errors import IntervalError


class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int) -> None:
        self.sign = sign

    def __lt__(self, other: object) -> bool:
        if other is self:
            return False
        return self.sign < 0

    def __le__(self, other: object) -> bool:
        return other is self or self.sign < 0

    def __gt__(self, other: object) -> bool:
        if other is self:
            return False
        return self.sign > 0

    def __ge__(self, other: object) -> bool:
        return other is self or self.sign > 0

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash(("inf", self.sign))

    def __neg__(self) -> "_Infinity":
        return POS_INF if self.sign < 0 else NEG_INF

    def __repr__(self) -> str:
        return "-inf" if self.sign < 0 else "+inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_infinity, (self.sign,))


def _infinity(sign: int) -> "_Infinity":
    return NEG_INF if sign < 0 else POS_INF


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(1)

ExtendedPoint = Union[Fraction, _Infinity]
Measure = Union[Fraction, _Infinity]


def is_finite(p: ExtendedPoint) -> bool:
    return not isinstance(p, _Infinity)


# ---------------------------------------------------------------------------
# Interval
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """
    One connected piece of the extended rational line.

    lo == hi is allowed only for a closed, finite, degenerate point.
    """

    lo: ExtendedPoint
    hi: ExtendedPoint
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        problem = interval_problem(self.lo, self.hi, self.lo_closed, self.hi_closed)
        if problem:
            raise IntervalError(problem)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def closed(cls, a, b) -> "Interval":
        return cls(_coerce(a), _coerce(b), is_finite(_coerce(a)), is_finite(_coerce(b)))

    @classmethod
    def open(cls, a, b) -> "Interval":
        return cls(_coerce(a), _coerce(b), False, False)

    @classmethod
    def point(cls, a) -> "Interval":
        p = _coerce(a)
        return cls(p, p, True, True)

    @classmethod
    def closed_open(cls, a, b) -> "Interval":
        return cls(_coerce(a), _coerce(b), is_finite(_coerce(a)), False)

    @classmethod
    def open_closed(cls, a, b) -> "Interval":
        return cls(_coerce(a), _coerce(b), False, is_finite(_coerce(b)))

    @classmethod
    def full_line(cls) -> "Interval":
        return cls(NEG_INF, POS_INF, False, False)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return is_finite(self.lo) and is_finite(self.hi)

    @property
    def is_closed(self) -> bool:
        return (self.lo_closed or not is_finite(self.lo)) and (
            self.hi_closed or not is_finite(self.hi)
        )

    @property
    def length(self) -> Measure:
        if not self.is_bounded:
            return POS_INF
        return self.hi - self.lo  # type: ignore[operator]

    @property
    def midpoint(self) -> Fraction:
        if not self.is_bounded:
            raise IntervalError("unbounded interval has no midpoint")
        return (self.lo + self.hi) / 2  # type: ignore[operator]

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self) -> str:
        if self.is_degenerate:
            return "{" + str(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"


def _coerce(p) -> ExtendedPoint:
    if isinstance(p, _Infinity):
        return p
    if isinstance(p, float):
        raise IntervalError("float endpoints are not accepted; use Fraction")
    return Fraction(p)


def interval_problem(lo: ExtendedPoint, hi: ExtendedPoint, lo_closed: bool, hi_closed: bool) -> str:
    """Return a description of what is wrong with the endpoints, or ''."""
    if lo is POS_INF or hi is NEG_INF:
        return f"endpoint order impossible: lo={lo}, hi={hi}"
    if lo > hi:
        return f"lo > hi ({lo} > {hi})"
    if (lo_closed and not is_finite(lo)) or (hi_closed and not is_finite(hi)):
        return "infinite endpoints cannot be closed"
    if lo == hi and not (lo_closed and hi_closed):
        return f"degenerate interval at {lo} must be closed on both sides"
    return ""


def make_interval(
    lo: ExtendedPoint, hi: ExtendedPoint, lo_closed: bool, hi_closed: bool
) -> Optional[Interval]:
    """Build an interval, or None when the endpoints describe an empty set."""
    if lo > hi:
        return None
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return Interval(lo, hi, lo_closed and is_finite(lo), hi_closed and is_finite(hi))


# ---------------------------------------------------------------------------
# IntervalSet
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntervalSet:
    """
    Canonical finite union of disjoint, non-adjacent intervals sorted by lo.

    Build instances through `canonicalize` (or the algebra operations);
    the constructor trusts its input.
    """

    parts: Tuple[Interval, ...] = ()

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def of(cls, *intervals: Interval) -> "IntervalSet":
        from .algebra import canonicalize

        return canonicalize(list(intervals))

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return " ∪ ".join(str(p) for p in self.parts)

    # ------------------------------------------------------------------
    # Cached lookup tables (parts are immutable)
    # ------------------------------------------------------------------
    @cached_property
    def los(self) -> list:
        return [p.lo for p in self.parts]

    @cached_property
    def his(self) -> list:
        return [p.hi for p in self.parts]

    @cached_property
    def cumulative(self) -> list:
        """Prefix sums of bounded part lengths (unbounded parts count as 0)."""
        sums = [Fraction(0)]
        for p in self.parts:
            sums.append(sums[-1] + (p.length if p.is_bounded else 0))  # type: ignore[operator]
        return sums

    @property
    def endpoints(self) -> Iterable[Fraction]:
        for p in self.parts:
            if is_finite(p.lo):
                yield p.lo  # type: ignore[misc]
            if is_finite(p.hi) and p.hi != p.lo:
                yield p.hi  # type: ignore[misc]
