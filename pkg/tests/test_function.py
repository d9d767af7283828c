"""
Tests for exact evaluation of f = Σ f_n and its certificates.
"""

import concurrent.futures
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lipset.construction import (
    LipFunction,
    active_levels,
    constancy_radius,
    envelope_check,
    eval_f,
    eval_f1,
    eval_fn,
    evaluations_to_csv,
    expected_lip,
    lipschitz_certificate,
    stage_of,
    validate_chain,
)
from lipset.errors import ChainError
from lipset.intervals import Interval, IntervalSet
from lipset.utils.rationals import random_rational

# E₁ = [0,1], E₂ adds blocks on both half-lines
HALF_LINES = validate_chain(
    [
        IntervalSet.of(Interval.closed(0, 1)),
        IntervalSet.of(Interval.closed(-6, -5), Interval.closed(0, 1), Interval.closed(5, 6)),
    ]
)

rationals = st.builds(
    lambda n, d: F(n, d), st.integers(-8 * 64, 8 * 64), st.sampled_from([1, 3, 7, 64, 96])
)


class TestFirstLevel:
    """
    Test f₁.
    """

    def test_unit_chain(self, unit_chain):
        """f₁(x) = |[0,x] ∩ [0,1]|, mirrored for x < 0."""
        assert eval_f1(unit_chain, F(1, 2)) == F(1, 2)
        assert eval_f1(unit_chain, F(-3)) == 0
        assert eval_f1(unit_chain, F(7)) == 1

    def test_two_blocks(self, two_step_chain):
        """f₁(5/2) = 3/2 on [0,1] ∪ [2,3]."""
        assert eval_f1(two_step_chain, F(5, 2)) == F(3, 2)


class TestLevelFunctions:
    """
    Test f_n for n ≥ 2.
    """

    def test_two_step_cell_value(self, two_step_f):
        """f₂(191/128) = 1/128 in the cell (95/64, 3/2]."""
        assert eval_fn(2, two_step_f, F(191, 128)) == F(1, 128)

    def test_vanishes_on_previous_stage(self, two_step_f):
        """f₂ = 0 on E₁."""
        for x in (F(0), F(1, 2), F(1), F(2), F(5, 2), F(3)):
            assert eval_fn(2, two_step_f, x) == 0

    def test_vanishes_beyond_depth(self, unit_f):
        """f_n = 0 for n > N."""
        assert eval_fn(2, unit_f, F(5)) == 0

    def test_zero_at_breakpoints(self, two_step_f):
        """f₂(a_k) = 0 at every breakpoint of (1,2)."""
        stream = two_step_f.stream(2, Interval.open(1, 2))
        assert all(eval_fn(2, two_step_f, stream.breakpoint(k)) == 0 for k in range(40))

    def test_level_must_be_positive(self, unit_f):
        """Level 0 is rejected."""
        with pytest.raises(ChainError):
            eval_fn(0, unit_f, F(0))

    def test_missed_interval_is_zero(self):
        """A contiguous interval that E_n misses contributes nothing."""
        chain = validate_chain([IntervalSet.of(Interval.closed(0, 1))] * 2)
        assert eval_fn(2, LipFunction(chain), F(3)) == 0

    def test_half_line_grids(self):
        """Far out on a half-line f_n peaks at 2^-n/2 in the middle of a grid cell."""
        f = LipFunction(HALF_LINES)
        assert eval_fn(2, f, F(43, 8)) == F(1, 8)
        assert eval_fn(2, f, F(-43, 8)) == F(1, 8)
        assert eval_fn(2, f, F(11, 2)) == 0
        assert eval_fn(2, f, F(3)) == 0


class TestFullFunction:
    """
    Test f = Σ f_n.
    """

    def test_unit_chain_values(self, unit_f):
        """f(1/2) = 1/2 and f(2) = f(3) = 1 for E = [0,1]."""
        assert eval_f(unit_f, F(1, 2)) == F(1, 2)
        assert eval_f(unit_f, F(2)) == 1
        assert unit_f(F(3)) == 1

    def test_two_step_value(self, two_step_f):
        """f(1) = 1 for the chain ([0,1] ∪ [2,3], [0,3])."""
        assert eval_f(two_step_f, F(1)) == 1

    def test_interior_attainment(self, unit_f):
        """|f(x+r) − f(x)| = r inside [0,1]."""
        rng = random.Random(7)
        for _ in range(200):
            x = random_rational(rng, F(0), F(1, 2))
            r = random_rational(rng, F(0), F(1, 2))
            assert abs(eval_f(unit_f, x + r) - eval_f(unit_f, x)) == r

    def test_tolerance_skips_levels(self, two_step_chain):
        """Levels with 2^-n below the tolerance are skipped; level 1 never is."""
        f = LipFunction(two_step_chain, tolerance=F(1, 2))
        assert active_levels(f) == [1]
        assert active_levels(LipFunction(two_step_chain)) == [1, 2]

    def test_threads_agree(self, two_step_chain):
        """Evaluation from several threads matches serial evaluation."""
        points = [F(k, 37) for k in range(-20, 150)]
        serial = [eval_f(LipFunction(two_step_chain), x) for x in points]
        shared = LipFunction(two_step_chain)
        with concurrent.futures.ThreadPoolExecutor(max_workers=4) as executor:
            parallel = list(executor.map(shared, points))
        assert parallel == serial

    def test_csv(self, unit_f):
        """Evaluation CSV with a decimal column."""
        assert evaluations_to_csv(unit_f, [F(0), F(1, 2)]) == "x,f,f_dec\n0,0,0\n1/2,1/2,0.5\n"


class TestCertificates:
    """
    Test envelope and Lipschitz certificates.
    """

    def test_envelope(self, two_step_f):
        """0 ≤ f_n ≤ min{2^-n, 2^-n d²} on sampled points."""
        f = two_step_f
        rng = random.Random(11)
        points = [random_rational(rng, F(-2), F(5)) for _ in range(300)]
        report = envelope_check(f, points)
        assert report.passed, report.violations

    def test_envelope_half_lines(self):
        """The envelope holds on unbounded contiguous intervals too."""
        f = LipFunction(HALF_LINES)
        points = [F(k, 16) for k in range(-128, 129)]
        assert envelope_check(f, points).passed

    @given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=10))
    @settings(max_examples=50, deadline=None)
    def test_lipschitz_certificate(self, pairs):
        """|f(a) − f(b)| ≤ |[a,b] ∩ E_N| for the two-step and half-line chains."""
        for chain in (HALF_LINES, validate_chain(
            [
                IntervalSet.of(Interval.closed(0, 1), Interval.closed(2, 3)),
                IntervalSet.of(Interval.closed(0, 3)),
            ]
        )):
            report = lipschitz_certificate(LipFunction(chain), pairs)
            assert report.passed, report.violations
            assert report.checked == len(pairs)


class TestSupplementaryQueries:
    """
    Test stage lookup, expected lip and constancy radius.
    """

    def test_stage_of(self, two_step_chain):
        """Least stage containing x."""
        assert stage_of(two_step_chain, F(1, 2)) == 1
        assert stage_of(two_step_chain, F(3, 2)) == 2
        assert stage_of(two_step_chain, F(4)) is None

    def test_expected_lip(self, two_step_chain):
        """The indicator of E_N."""
        assert expected_lip(two_step_chain, F(3, 2)) == 1
        assert expected_lip(two_step_chain, F(-1)) == 0

    def test_constancy_radius(self, unit_f):
        """f is constant on the ball of radius d(x, E_N) around x ∉ E_N."""
        x = F(3)
        radius = constancy_radius(unit_f, x)
        assert radius == 2
        value = eval_f(unit_f, x)
        for y in (x - radius + F(1, 1000), x + radius - F(1, 1000), x + 10):
            assert eval_f(unit_f, y) == value
        assert constancy_radius(unit_f, F(1, 2)) == 0

    def test_constancy_radius_two_step(self):
        """Constancy outside E_N also holds when higher levels are active."""
        f = LipFunction(HALF_LINES)
        x = F(3)
        radius = constancy_radius(f, x)
        assert radius == 2
        value = eval_f(f, x)
        samples = [x + radius * F(k, 20) for k in range(-19, 20)]
        assert all(eval_f(f, y) == value for y in samples)
