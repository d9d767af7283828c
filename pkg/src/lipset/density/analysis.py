"""
One-sided Lebesgue densities and the finite-stage SOSD scan.

Both one-sided measures |E ∩ [x−r, x]| and |E ∩ [x, x+r]| are piecewise
affine in r, with breaks only at radii |x − e| for endpoints e of E. Between
two such radii each density is monotone, so the minimum of their maximum over
a radius range is attained at a break, at a range end, or where the two
affine numerators cross. The scan evaluates exactly those radii.
"""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..errors import DensityError
from ..intervals import Interval, IntervalSet, contains, is_finite, measure_in
from .models import DensityProfile, DensityRow, SosdReport, SosdVerdict

logger = logging.getLogger("lipset.density")

DEFAULT_THRESHOLD = Fraction(9, 10)
DEFAULT_RATIO = Fraction(1, 2)


def _positive_radius(r: Fraction) -> Fraction:
    r = Fraction(r)
    if r <= 0:
        raise DensityError(f"radius must be positive, got {r}")
    return r


def left_mass(e: IntervalSet, x: Fraction, r: Fraction) -> Fraction:
    return measure_in(e, Interval.closed(x - r, x))


def right_mass(e: IntervalSet, x: Fraction, r: Fraction) -> Fraction:
    return measure_in(e, Interval.closed(x, x + r))


def left_density(e: IntervalSet, x: Fraction, r: Fraction) -> Fraction:
    """|E ∩ [x−r, x]| / r."""
    r = _positive_radius(r)
    x = Fraction(x)
    return left_mass(e, x, r) / r


def right_density(e: IntervalSet, x: Fraction, r: Fraction) -> Fraction:
    """|E ∩ [x, x+r]| / r."""
    r = _positive_radius(r)
    x = Fraction(x)
    return right_mass(e, x, r) / r


def density_profile(e: IntervalSet, x: Fraction, radii: Sequence[Fraction]) -> DensityProfile:
    x = Fraction(x)
    checked = [_positive_radius(r) for r in radii]
    for prev, cur in zip(checked, checked[1:]):
        if cur >= prev:
            raise DensityError(f"radii must be strictly decreasing ({prev} then {cur})")
    rows = tuple(
        DensityRow(radius=r, left=left_mass(e, x, r) / r, right=right_mass(e, x, r) / r)
        for r in checked
    )
    return DensityProfile(point=x, rows=rows)


def _check_range(r_min: Fraction, r_max: Fraction) -> Tuple[Fraction, Fraction]:
    r_min, r_max = Fraction(r_min), Fraction(r_max)
    if not (0 < r_min < r_max):
        raise DensityError(f"need 0 < r_min < r_max, got r_min={r_min}, r_max={r_max}")
    return r_min, r_max


def critical_radii(
    e: IntervalSet, x: Fraction, r_min: Fraction, r_max: Fraction
) -> List[Fraction]:
    """
    Sorted radii in [r_min, r_max] at which a one-sided mass can change slope:
    both range ends plus every |x − e| strictly inside the range.
    """
    r_min, r_max = _check_range(r_min, r_max)
    x = Fraction(x)
    out = {r_min, r_max}
    if e:
        first = bisect_left(e.his, x - r_max)
        last = bisect_right(e.los, x + r_max)
        for p in e.parts[first:last]:
            for end in (p.lo, p.hi):
                if is_finite(end):
                    d = abs(x - end)  # type: ignore[operator]
                    if r_min < d < r_max:
                        out.add(d)
    return sorted(out)


def geometric_radii(r_max: Fraction, r_min: Fraction, ratio: Fraction) -> List[Fraction]:
    """r_max·ratioᵏ for k = 0, 1, … while the radius stays ≥ r_min (decreasing)."""
    ratio = Fraction(ratio)
    if not (0 < ratio < 1):
        raise DensityError(f"ratio must lie in (0, 1), got {ratio}")
    out: List[Fraction] = []
    r = Fraction(r_max)
    while r >= r_min:
        out.append(r)
        r *= ratio
    return out


def sosd_scan(
    e: IntervalSet,
    x: Fraction,
    r_max: Fraction,
    r_min: Fraction,
    threshold: Fraction = DEFAULT_THRESHOLD,
    ratio: Fraction = DEFAULT_RATIO,
) -> SosdReport:
    """
    Exact min over r ∈ [r_min, r_max] of max(left, right) density at x ∈ E.

    PASS iff that minimum is at least `threshold`.
    """
    x = Fraction(x)
    threshold = Fraction(threshold)
    r_min, r_max = _check_range(r_min, r_max)
    if not (0 <= threshold <= 1):
        raise DensityError(f"threshold must lie in [0, 1], got {threshold}")
    if not contains(e, x):
        raise DensityError(f"point {x} is not in the set")

    base = set(critical_radii(e, x, r_min, r_max))
    base.update(geometric_radii(r_max, r_min, ratio))
    radii = sorted(base)

    masses: Dict[Fraction, Tuple[Fraction, Fraction]] = {
        r: (left_mass(e, x, r), right_mass(e, x, r)) for r in radii
    }

    # crossing of the affine numerators inside each segment
    crossings: List[Fraction] = []
    for r0, r1 in zip(radii, radii[1:]):
        l0, q0 = masses[r0]
        l1, q1 = masses[r1]
        span = r1 - r0
        slope_l = (l1 - l0) / span
        slope_r = (q1 - q0) / span
        if slope_l == slope_r:
            continue
        cross = r0 + (q0 - l0) / (slope_l - slope_r)
        if r0 < cross < r1:
            crossings.append(cross)
    for r in crossings:
        masses[r] = (left_mass(e, x, r), right_mass(e, x, r))
    candidates = sorted(masses)

    worst_radius = candidates[0]
    worst = max(masses[worst_radius]) / worst_radius
    for r in candidates[1:]:
        value = max(masses[r]) / r
        if value < worst:
            worst, worst_radius = value, r

    verdict = SosdVerdict.PASS if worst >= threshold else SosdVerdict.FAIL
    logger.debug(
        "SOSD scan at %s: %d radii, min max-density %s at r=%s (%s)",
        x,
        len(candidates),
        worst,
        worst_radius,
        verdict.value,
    )
    return SosdReport(
        point=x,
        r_min=r_min,
        r_max=r_max,
        threshold=threshold,
        min_max_density=worst,
        worst_radius=worst_radius,
        verdict=verdict,
        radii_scanned=len(candidates),
        candidates=candidates,
    )
