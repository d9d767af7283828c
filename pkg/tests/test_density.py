"""
Tests for one-sided densities and SOSD scans.
"""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lipset.density import (
    DensityProfile,
    DensityRow,
    SosdVerdict,
    critical_radii,
    density_profile,
    geometric_radii,
    left_density,
    profile_to_csv,
    right_density,
    scans_to_csv,
    sosd_scan,
)
from lipset.errors import DensityError
from lipset.intervals import NEG_INF, POS_INF, Interval, IntervalSet, canonicalize

UNIT = IntervalSet.of(Interval.closed(0, 1))
TWO_BLOCKS = IntervalSet.of(Interval.closed(0, 1), Interval.closed(2, 3))


def brute_force_min(e, x, r_min, r_max, steps=256):
    """min over an equally spaced radius grid of max(left, right) density."""
    width = r_max - r_min
    best = None
    for i in range(steps + 1):
        r = r_min + width * F(i, steps)
        value = max(left_density(e, x, r), right_density(e, x, r))
        best = value if best is None else min(best, value)
    return best


class TestOneSidedDensities:
    """
    Test left and right densities.
    """

    def test_interior_point(self):
        """Both densities are 1 well inside [0,1]."""
        assert left_density(UNIT, F(1, 2), F(1, 10)) == 1
        assert right_density(UNIT, F(1, 2), F(1, 10)) == 1

    def test_right_endpoint(self):
        """At x = 1 only the left side is full."""
        assert left_density(UNIT, F(1), F(1, 10)) == 1
        assert right_density(UNIT, F(1), F(1, 10)) == 0

    def test_gap_midpoint(self):
        """x = 3/2 between two blocks sees density 1/2 on both sides at r = 1."""
        assert left_density(TWO_BLOCKS, F(3, 2), F(1)) == F(1, 2)
        assert right_density(TWO_BLOCKS, F(3, 2), F(1)) == F(1, 2)

    @pytest.mark.parametrize("r", [F(0), F(-1)])
    def test_nonpositive_radius(self, r):
        """r ≤ 0 raises DensityError."""
        with pytest.raises(DensityError):
            left_density(UNIT, F(1, 2), r)

    def test_unbounded_set(self):
        """Half-lines are handled through restricted measure."""
        e = IntervalSet.of(Interval.closed(0, POS_INF))
        assert right_density(e, F(0), F(10**6)) == 1
        assert left_density(e, F(0), F(5)) == 0


class TestDensityProfile:
    """
    Test density profiles and their CSV export.
    """

    def test_profile_rows(self):
        """Rows follow the radii and carry the larger side."""
        profile = density_profile(UNIT, F(1), [F(1), F(1, 2)])
        assert [row.radius for row in profile.rows] == [F(1), F(1, 2)]
        assert all(row.max_density == 1 for row in profile.rows)
        assert all(row.right == 0 for row in profile.rows)

    def test_radii_must_decrease(self):
        """Non-decreasing radii are rejected."""
        with pytest.raises(DensityError):
            density_profile(UNIT, F(1, 2), [F(1, 4), F(1, 2)])

    def test_profile_model_validates(self):
        """The model itself refuses increasing radii."""
        with pytest.raises(DensityError):
            DensityProfile(F(0), (DensityRow(F(1), F(0), F(0)), DensityRow(F(2), F(0), F(0))))

    def test_profile_csv(self):
        """CSV carries exact columns and decimal twins on request."""
        profile = density_profile(TWO_BLOCKS, F(3, 2), [F(1)])
        assert profile_to_csv(profile) == "x,r,left,right,max\n3/2,1,1/2,1/2,1/2\n"
        with_dec = profile_to_csv(profile, decimals=12).splitlines()
        assert with_dec[0] == "x,r,left,right,max,left_dec,right_dec,max_dec"
        assert with_dec[1].endswith(",0.5,0.5,0.5")


class TestSosdScan:
    """
    Test the exact finite-stage SOSD scan.
    """

    def test_full_line(self):
        """E = ℝ has max density 1 at every radius."""
        line = IntervalSet.of(Interval.full_line())
        report = sosd_scan(line, F(0), F(1), F(1, 1024))
        assert report.min_max_density == 1
        assert report.verdict is SosdVerdict.PASS

    def test_right_endpoint_passes(self):
        """x = 1 in [0,1] keeps left density 1 for r ≤ 1."""
        report = sosd_scan(UNIT, F(1), F(1), F(1, 64))
        assert report.min_max_density == 1
        assert report.passed

    def test_endpoint_facing_gap(self):
        """At x = 1 in [0,1] ∪ [2,3] the minimum 1/2 is reached at r = 2."""
        report = sosd_scan(TWO_BLOCKS, F(1), F(2), F(1, 2))
        assert report.min_max_density == F(1, 2)
        assert report.worst_radius == 2
        assert report.verdict is SosdVerdict.FAIL

    def test_point_outside_set(self):
        """x ∉ E raises DensityError."""
        with pytest.raises(DensityError):
            sosd_scan(TWO_BLOCKS, F(3, 2), F(1), F(1, 2))

    def test_bad_ranges(self):
        """r_min must be positive and below r_max; threshold in [0,1]."""
        with pytest.raises(DensityError):
            sosd_scan(UNIT, F(1, 2), F(1, 4), F(1, 2))
        with pytest.raises(DensityError):
            sosd_scan(UNIT, F(1, 2), F(1, 4), F(0))
        with pytest.raises(DensityError):
            sosd_scan(UNIT, F(1, 2), F(1, 4), F(1, 8), threshold=F(2))

    def test_isolated_point(self):
        """An isolated point has density 0 on both sides."""
        e = IntervalSet.of(Interval.point(0), Interval.closed(1, 2))
        report = sosd_scan(e, F(0), F(1, 2), F(1, 8))
        assert report.min_max_density == 0

    def test_critical_radii(self):
        """Both range ends plus every endpoint distance strictly inside."""
        radii = critical_radii(TWO_BLOCKS, F(1), F(1, 2), F(3))
        assert radii == [F(1, 2), F(1), F(2), F(3)]

    def test_geometric_radii(self):
        """r_max·ratioᵏ down to r_min."""
        assert geometric_radii(F(1), F(1, 8), F(1, 2)) == [F(1), F(1, 2), F(1, 4), F(1, 8)]
        with pytest.raises(DensityError):
            geometric_radii(F(1), F(1, 8), F(1))

    def test_crossing_radius_found(self):
        """A minimum strictly between breaks comes from the crossing of the two sides."""
        # x = 1: left mass is 1 from r = 1 on, right mass is r - 1/2; they cross at 3/2
        e = IntervalSet.of(Interval.closed(0, 1), Interval.closed(F(3, 2), 3))
        report = sosd_scan(e, F(1), F(2), F(1, 4))
        assert report.worst_radius == F(3, 2)
        assert report.min_max_density == F(2, 3)
        assert report.min_max_density < brute_force_min(e, F(1), F(1, 4), F(2), steps=1024)

    def test_scan_csv(self):
        """Scan CSV has one row per point."""
        report = sosd_scan(TWO_BLOCKS, F(1), F(2), F(1, 2))
        lines = scans_to_csv([report]).splitlines()
        assert lines[0].startswith("x,r_min,r_max,threshold,min_max_density,worst_radius")
        assert lines[1].startswith("1,1/2,2,9/10,1/2,2,FAIL,")


@st.composite
def sets_with_point(draw):
    raw = []
    for _ in range(draw(st.integers(1, 4))):
        lo = F(draw(st.integers(-8, 8)), 4)
        hi = lo + F(draw(st.integers(0, 8)), 4)
        raw.append(Interval.closed(lo, hi))
    e = canonicalize(raw)
    part = draw(st.sampled_from(e.parts))
    x = draw(st.sampled_from([part.lo, part.hi, (part.lo + part.hi) / 2]))
    return e, x


class TestScanMatchesSweep:
    """
    The scan minimum is exact: never above any swept radius, and attained.
    """

    @given(sets_with_point())
    @settings(max_examples=60, deadline=None)
    def test_scan_not_above_sweep(self, case):
        """No grid radius beats the scan minimum, and worst_radius attains it."""
        e, x = case
        r_min, r_max = F(1, 8), F(4)
        report = sosd_scan(e, x, r_max, r_min)
        assert report.min_max_density <= brute_force_min(e, x, r_min, r_max, steps=128)
        r = report.worst_radius
        assert r_min <= r <= r_max
        assert max(left_density(e, x, r), right_density(e, x, r)) == report.min_max_density

    @given(sets_with_point())
    @settings(max_examples=40, deadline=None)
    def test_left_mass_monotone(self, case):
        """r·left density is nondecreasing in r."""
        e, x = case
        radii = [F(k, 8) for k in range(1, 33)]
        masses = [r * left_density(e, x, r) for r in radii]
        assert masses == sorted(masses)
