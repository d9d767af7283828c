"""
Invariant suite behind `lipset verify`.

Each check is a function of the run context returning one CheckResult;
checks are grouped by suite and run in registration order, each with its
own seeded generator so adding a check never shifts another's samples.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..bundled import bundled_chain, bundled_schedule
from ..cantor import (
    build_f_infinity,
    build_full_measure_sosd,
    default_schedule,
    density_window_check,
    level_measure,
    levelk_open,
    neighbor_gaps_open,
    sample_union_points,
    tile_sets,
    union_of_stages,
)
from ..construction import (
    DEFAULT_RULE,
    BreakpointRule,
    BreakpointStream,
    LipFunction,
    breakpoint_conditions,
    envelope_check,
    eval_f,
    eval_fn,
    lipschitz_certificate,
)
from ..density import left_density, right_density, sosd_scan
from ..errors import LipsetError
from ..estimation import lip_scan, scan_is_consistent
from ..intervals import (
    NEG_INF,
    POS_INF,
    Interval,
    IntervalSet,
    canonicalize,
    complement_in,
    distance,
    intersect,
    is_finite,
    measure,
    measure_in,
    scale_translate,
    union,
)
from ..utils.rationals import random_rational
from .models import CheckResult, CheckStatus, VerificationReport

logger = logging.getLogger("lipset.verification")

SUITE_NAMES = ("intervals", "builder", "estimator", "density", "cantor")

SAMPLE_LO = Fraction(-2)
SAMPLE_HI = Fraction(5)


@dataclass
class SuiteContext:
    seed: int
    depth: int = 3
    rule: BreakpointRule = DEFAULT_RULE
    samples: int = 1000
    _functions: Dict[str, LipFunction] = field(default_factory=dict)

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")

    def function(self, chain_name: str) -> LipFunction:
        f = self._functions.get(chain_name)
        if f is None:
            f = LipFunction(bundled_chain(chain_name), self.rule)
            self._functions[chain_name] = f
        return f


Check = Callable[[SuiteContext], CheckResult]
_REGISTRY: Dict[str, List[Tuple[str, Check]]] = {name: [] for name in SUITE_NAMES}


def check(suite: str, name: str) -> Callable[[Check], Check]:
    def register(fn: Check) -> Check:
        _REGISTRY[suite].append((name, fn))
        return fn

    return register


def _result(name: str, suite: str, ok: bool, condition: Optional[str] = None, **details) -> CheckResult:
    return CheckResult(
        name=name,
        suite=suite,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        condition=None if ok else condition,
        details=details,
    )


# ---------------------------------------------------------------------------
# Random inputs
# ---------------------------------------------------------------------------

def random_interval_set(rng: random.Random, max_parts: int = 4) -> IntervalSet:
    raw: List[Interval] = []
    for _ in range(rng.randint(0, max_parts)):
        a = random_rational(rng, SAMPLE_LO, SAMPLE_HI, max_bits=4)
        b = random_rational(rng, SAMPLE_LO, SAMPLE_HI, max_bits=4)
        lo, hi = min(a, b), max(a, b)
        if lo == hi:
            raw.append(Interval.point(lo))
        else:
            raw.append(Interval(lo, hi, rng.random() < 0.5, rng.random() < 0.5))
    return canonicalize(raw)


def closure(a: IntervalSet) -> IntervalSet:
    return canonicalize(
        [Interval(p.lo, p.hi, is_finite(p.lo), is_finite(p.hi)) for p in a.parts]
    )


def _points(rng: random.Random, count: int) -> List[Fraction]:
    return [random_rational(rng, SAMPLE_LO, SAMPLE_HI) for _ in range(count)]


# ---------------------------------------------------------------------------
# intervals
# ---------------------------------------------------------------------------

@check("intervals", "canonical_idempotent")
def _canonical_idempotent(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("canonical_idempotent")
    bad = 0
    for _ in range(ctx.samples):
        a = random_interval_set(rng)
        if canonicalize(list(a.parts)) != a:
            bad += 1
    return _result("canonical_idempotent", "intervals", bad == 0, "canonical form", violations=bad)


@check("intervals", "finite_additivity")
def _finite_additivity(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("finite_additivity")
    bad = 0
    for _ in range(ctx.samples):
        a, b = random_interval_set(rng), random_interval_set(rng)
        if measure(union(a, b)) + measure(intersect(a, b)) != measure(a) + measure(b):  # type: ignore[operator]
            bad += 1
    return _result("finite_additivity", "intervals", bad == 0, "additivity", violations=bad)


@check("intervals", "de_morgan_window")
def _de_morgan(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("de_morgan_window")
    window = Interval.closed(SAMPLE_LO, SAMPLE_HI)
    bad = 0
    for _ in range(ctx.samples):
        a, b = random_interval_set(rng), random_interval_set(rng)
        lhs = complement_in(union(a, b), window)
        rhs = intersect(complement_in(a, window), complement_in(b, window))
        if lhs != rhs:
            bad += 1
    return _result("de_morgan_window", "intervals", bad == 0, "De Morgan", violations=bad)


@check("intervals", "restricted_measure_bound")
def _restricted_measure(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("restricted_measure_bound")
    bad = 0
    for _ in range(ctx.samples):
        a = random_interval_set(rng)
        lo, hi = sorted(_points(rng, 2))
        window = Interval.closed(lo, hi)
        value = measure_in(a, window)
        if not (0 <= value <= hi - lo) or value != measure(intersect(a, IntervalSet((window,)))):
            bad += 1
    return _result(
        "restricted_measure_bound", "intervals", bad == 0, "restricted measure", violations=bad
    )


@check("intervals", "distance_zero_on_closure")
def _distance(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("distance_zero_on_closure")
    bad = 0
    for _ in range(ctx.samples):
        a = random_interval_set(rng)
        x = random_rational(rng, SAMPLE_LO, SAMPLE_HI, max_bits=4)
        d = distance(x, a)
        on_closure = any(p.lo <= x <= p.hi for p in closure(a).parts)
        if (d == 0) != on_closure or (not a and d is not POS_INF):
            bad += 1
    return _result(
        "distance_zero_on_closure", "intervals", bad == 0, "distance", violations=bad
    )


# ---------------------------------------------------------------------------
# builder
# ---------------------------------------------------------------------------

_STREAM_INTERVALS = (Interval.open(1, 2), Interval.open(1, POS_INF))


@check("builder", "breakpoint_conditions")
def _breakpoints(ctx: SuiteContext) -> CheckResult:
    count = min(ctx.samples, 1000)
    for iv in _STREAM_INTERVALS:
        for level in (2, 3, 4):
            stream = BreakpointStream(iv, level, ctx.rule)
            result = breakpoint_conditions(stream, count)
            if not result.ok:
                return _result(
                    "breakpoint_conditions",
                    "builder",
                    False,
                    result.condition,
                    interval=str(iv),
                    level=level,
                    index=result.index,
                    detail=result.detail,
                )
    return _result("breakpoint_conditions", "builder", True, checked=count)


@check("builder", "breakpoint_bracketing")
def _bracketing(ctx: SuiteContext) -> CheckResult:
    for iv in _STREAM_INTERVALS:
        for level in (2, 3, 4):
            stream = BreakpointStream(iv, level, ctx.rule)
            for j in range(1, 13):
                d = Fraction(1, 2**j)
                if d > stream.g0:
                    continue
                k = stream.bracket(d)
                if not (stream.offset(k) < d <= stream.offset(k - 1)):
                    return _result(
                        "breakpoint_bracketing",
                        "builder",
                        False,
                        "(III)",
                        interval=str(iv),
                        level=level,
                        offset=str(d),
                    )
    return _result("breakpoint_bracketing", "builder", True)


@check("builder", "zero_at_breakpoints")
def _zero_at_breakpoints(ctx: SuiteContext) -> CheckResult:
    f = ctx.function("two_step")
    stream = f.stream(2, Interval.open(1, 2))
    bad = [k for k in range(0, 50) if eval_fn(2, f, stream.breakpoint(k)) != 0]
    for e in f.chain.stage(1).endpoints:
        if eval_fn(2, f, e) != 0:
            bad.append(-1)
    return _result("zero_at_breakpoints", "builder", not bad, "continuity", violations=len(bad))


@check("builder", "envelope_bound")
def _envelope(ctx: SuiteContext) -> CheckResult:
    violations = 0
    checked = 0
    for name in ("unit", "two_step"):
        f = ctx.function(name)
        report = envelope_check(f, _points(ctx.rng(f"envelope:{name}"), ctx.samples))
        violations += len(report.violations)
        checked += report.checked
    return _result(
        "envelope_bound", "builder", violations == 0, "envelope", checked=checked, violations=violations
    )


@check("builder", "lipschitz_certificate")
def _certificate(ctx: SuiteContext) -> CheckResult:
    violations = 0
    checked = 0
    for name in ("unit", "two_step"):
        f = ctx.function(name)
        rng = ctx.rng(f"certificate:{name}")
        pairs = [tuple(_points(rng, 2)) for _ in range(ctx.samples)]
        report = lipschitz_certificate(f, pairs)  # type: ignore[arg-type]
        violations += len(report.violations)
        checked += report.checked
    return _result(
        "lipschitz_certificate",
        "builder",
        violations == 0,
        "measure growth",
        checked=checked,
        violations=violations,
    )


@check("builder", "interior_attainment")
def _attainment(ctx: SuiteContext) -> CheckResult:
    f = ctx.function("unit")
    rng = ctx.rng("interior_attainment")
    bad = 0
    for _ in range(ctx.samples):
        x = random_rational(rng, Fraction(0), Fraction(1))
        if x in (0, 1):
            continue
        r = random_rational(rng, Fraction(0), 1 - x)
        if r == 0 or x + r >= 1:
            continue
        if abs(eval_f(f, x + r) - eval_f(f, x)) != r:
            bad += 1
    return _result("interior_attainment", "builder", bad == 0, "attainment", violations=bad)


# ---------------------------------------------------------------------------
# estimator
# ---------------------------------------------------------------------------

_R_MIN = Fraction(1, 2**16)
_R_MAX = Fraction(1, 2**4)


@check("estimator", "lip_interior")
def _lip_interior(ctx: SuiteContext) -> CheckResult:
    est = lip_scan(ctx.function("unit"), Fraction(1, 3), _R_MAX, _R_MIN)
    ok = est.lip_lower == 1 and scan_is_consistent(est)
    return _result("lip_interior", "estimator", ok, "lip at 1/3", lip_lower=str(est.lip_lower))


@check("estimator", "lip_outside")
def _lip_outside(ctx: SuiteContext) -> CheckResult:
    est = lip_scan(ctx.function("unit"), Fraction(3), _R_MAX, _R_MIN)
    ok = est.Lip_upper <= Fraction(2, est.refinement) and est.Lip_lower == 0
    return _result("lip_outside", "estimator", ok, "Lip at 3", Lip_upper=str(est.Lip_upper))


@check("estimator", "lip_boundary")
def _lip_boundary(ctx: SuiteContext) -> CheckResult:
    est = lip_scan(ctx.function("unit"), Fraction(1), _R_MAX, _R_MIN)
    return _result(
        "lip_boundary", "estimator", est.lip_lower == 1, "lip at 1", lip_lower=str(est.lip_lower)
    )


# ---------------------------------------------------------------------------
# density
# ---------------------------------------------------------------------------

@check("density", "one_sided_examples")
def _density_examples(ctx: SuiteContext) -> CheckResult:
    unit = canonicalize([Interval.closed(0, 1)])
    two = canonicalize([Interval.closed(0, 1), Interval.closed(2, 3)])
    cases = [
        (unit, Fraction(1, 2), Fraction(1, 10), (1, 1)),
        (unit, Fraction(1), Fraction(1, 10), (1, 0)),
        (two, Fraction(3, 2), Fraction(1), (Fraction(1, 2), Fraction(1, 2))),
    ]
    bad = sum(
        1 for e, x, r, want in cases if (left_density(e, x, r), right_density(e, x, r)) != want
    )
    return _result("one_sided_examples", "density", bad == 0, "density", violations=bad)


@check("density", "scan_matches_sweep")
def _scan_sweep(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("scan_matches_sweep")
    bad = 0
    for _ in range(min(ctx.samples, 50)):
        e = closure(random_interval_set(rng))
        if not e:
            continue
        part = rng.choice(e.parts)
        x = part.lo if rng.random() < 0.5 else part.hi
        rep = sosd_scan(e, x, Fraction(2), Fraction(1, 64))
        steps = 256
        sweep = min(
            max(left_density(e, x, r), right_density(e, x, r))
            for r in (Fraction(1, 64) + i * (Fraction(2) - Fraction(1, 64)) / steps for i in range(steps + 1))
        )
        at_worst = max(left_density(e, x, rep.worst_radius), right_density(e, x, rep.worst_radius))
        if sweep < rep.min_max_density or at_worst != rep.min_max_density:
            bad += 1
    return _result("scan_matches_sweep", "density", bad == 0, "critical radii", violations=bad)


@check("density", "full_line")
def _full_line(ctx: SuiteContext) -> CheckResult:
    line = IntervalSet((Interval(NEG_INF, POS_INF, False, False),))
    rep = sosd_scan(line, Fraction(1, 3), Fraction(1), Fraction(1, 1024))
    return _result("full_line", "density", rep.min_max_density == 1, "full line")


# ---------------------------------------------------------------------------
# cantor
# ---------------------------------------------------------------------------

@check("cantor", "level_measure_recursion")
def _level_measures(ctx: SuiteContext) -> CheckResult:
    bad = [k for k in range(0, 7) if measure(levelk_open(0, 1, k)) != level_measure(k)]
    return _result("level_measure_recursion", "cantor", not bad, "(9/11)^k", levels=bad)


@check("cantor", "self_similarity")
def _self_similarity(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("self_similarity")
    bad = 0
    for _ in range(min(ctx.samples, 20)):
        a = random_rational(rng, SAMPLE_LO, SAMPLE_HI, max_bits=4)
        width = random_rational(rng, Fraction(1, 16), Fraction(4), max_bits=4)
        if width <= 0:
            continue
        k = rng.randint(0, 3)
        if levelk_open(a, a + width, k) != scale_translate(levelk_open(0, 1, k), a, width):
            bad += 1
    return _result("self_similarity", "cantor", bad == 0, "affine image", violations=bad)


@check("cantor", "neighbor_gaps")
def _neighbor_gaps(ctx: SuiteContext) -> CheckResult:
    failures = 0
    for k in range(1, 5):
        failures += len(neighbor_gaps_open(0, 1, k).failures)
    return _result("neighbor_gaps", "cantor", failures == 0, "7t gaps", failures=failures)


@check("cantor", "ledger_complement")
def _ledger(ctx: SuiteContext) -> CheckResult:
    depth = max(ctx.depth, 1)
    stage = build_f_infinity(default_schedule(depth), depth, materialize=False)
    ok = stage.ledger.complement >= Fraction(1, 2)
    return _result(
        "ledger_complement",
        "cantor",
        ok,
        "complement measure",
        depth=depth,
        complement=str(stage.ledger.complement),
    )


@check("cantor", "density_windows")
def _windows(ctx: SuiteContext) -> CheckResult:
    depth = min(max(ctx.depth, 1), 2)
    stage = build_f_infinity(bundled_schedule("small"), depth, materialize=True)
    report = density_window_check(stage, mode="critical")
    return _result(
        "density_windows",
        "cantor",
        report.passed,
        "density at most 1/2",
        depth=depth,
        checked=len(report.rows),
        max_density=str(report.max_density),
    )


@check("cantor", "full_measure_stage")
def _full_measure(ctx: SuiteContext) -> CheckResult:
    epsilon = Fraction(1, 4)
    assembly = build_full_measure_sosd(Interval.closed(0, 1), epsilon, copies=3, depth=1)
    sets = tile_sets(assembly)
    disjoint = all(
        not intersect(sets[i], sets[j]) for i in range(len(sets)) for j in range(i + 1, len(sets))
    )
    union_set = union_of_stages(assembly)
    points = sample_union_points(assembly, min(ctx.samples, 20), ctx.seed)
    worst = min(
        (
            sosd_scan(union_set, x, _R_MAX, Fraction(1, 2**12), threshold=Fraction(1, 2)).min_max_density
            for x in points
        ),
        default=Fraction(1),
    )
    ok = disjoint and assembly.uncovered <= epsilon and worst >= Fraction(1, 2)
    return _result(
        "full_measure_stage",
        "cantor",
        ok,
        "uncovered measure and SOSD scan",
        uncovered=str(assembly.uncovered),
        disjoint=disjoint,
        min_max_density=str(worst),
    )


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def run_suite(
    suite: str = "all",
    seed: int = 42,
    depth: int = 3,
    rule: BreakpointRule = DEFAULT_RULE,
    samples: int = 1000,
) -> VerificationReport:
    if suite != "all" and suite not in SUITE_NAMES:
        raise LipsetError(f"unknown suite {suite!r}")
    names: Sequence[str] = SUITE_NAMES if suite == "all" else (suite,)
    ctx = SuiteContext(seed=seed, depth=depth, rule=rule, samples=samples)
    report = VerificationReport(
        suite,
        seed,
        {"depth": depth, "rule": rule.to_dict(), "samples": samples},
    )
    for name in names:
        for check_name, fn in _REGISTRY[name]:
            try:
                result = fn(ctx)
            except LipsetError as e:
                result = _result(check_name, name, False, e.code.value, error=str(e))
            logger.debug("%s", result)
            report.record(result)
    failed = report.get_failed()
    if failed:
        logger.warning("%d of %d checks failed", len(failed), len(report.results))
    return report
