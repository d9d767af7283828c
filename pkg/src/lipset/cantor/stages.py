"""
Generations of the positive-measure Cantor-type set and full-measure tilings.

Generation 1 removes the level-l₁ open set of the window. Generation n
removes, inside every ℱ-component [a, b] left by generation n−1, the level-l_n
open set of (a, b); a and b stay in the set. The ledger is exact for any
depth; geometry is only built when it fits the materialization limit.
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.settings import get_settings
from ..errors import BudgetExceededError, InfeasibleBudgetError, ScheduleError, WindowError
from ..intervals import (
    Interval,
    IntervalSet,
    canonicalize,
    difference,
    union,
)
from ..utils.json import load_json
from .levels import level_pattern, minimal_level
from .models import (
    OPEN_RATIO,
    CantorStage,
    ComponentClass,
    FComponent,
    FullMeasureStage,
    LedgerEntry,
    LevelSchedule,
    MeasureLedger,
)

logger = logging.getLogger("lipset.cantor")

UNIT_WINDOW = Interval.closed(0, 1)
DEFAULT_MAX_LEVEL = 40


def load_schedule(path: str | Path) -> LevelSchedule:
    return LevelSchedule.from_dict(load_json(path))


def _check_window(window: Interval) -> None:
    if not window.is_bounded or window.is_degenerate or not window.is_closed:
        raise WindowError(f"construction window must be a closed bounded interval, got {window}")


def _census(schedule: LevelSchedule, depth: int, window_length: Fraction) -> List[ComponentClass]:
    out: List[ComponentClass] = []
    parents: Dict[Fraction, int] = {window_length: 1}
    for n in range(1, depth + 1):
        level = schedule.levels[n - 1]
        classes: Dict[Tuple[int, Fraction], int] = defaultdict(int)
        children: Dict[Fraction, int] = defaultdict(int)
        for length, count in parents.items():
            for m in range(1, level + 1):
                child = length / 11 * Fraction(3, 11) ** (m - 1)
                k = count * 2 * 3 ** (m - 1)
                classes[(m, child)] += k
                children[child] += k
        out.extend(
            ComponentClass(n, m, length, count)
            for (m, length), count in sorted(classes.items(), key=lambda kv: (kv[0][0], -kv[0][1]))
        )
        parents = dict(children)
    return out


def _ledger(schedule: LevelSchedule, depth: int, window_length: Fraction) -> Tuple[MeasureLedger, int]:
    """Exact ledger plus the projected number of open parts."""
    ledger = MeasureLedger(window_length)
    complement = window_length
    components = 1
    parts = 0
    for n in range(1, depth + 1):
        level = schedule.levels[n - 1]
        removed = OPEN_RATIO**level * complement
        complement -= removed
        parts += components * 3**level
        components *= 3**level - 1
        ledger.entries.append(LedgerEntry(n, level, removed, complement, components))
    return ledger, parts


def build_f_infinity(
    schedule: LevelSchedule,
    depth: int,
    materialize: Optional[bool] = None,
    window: Interval = UNIT_WINDOW,
) -> CantorStage:
    """
    Build generations 1..depth.

    materialize=None decides from the configured limit; True forces the
    geometry, False keeps the stage ledger-only.
    """
    if depth < 0:
        raise ScheduleError(f"depth must be non-negative, got {depth}")
    if depth > len(schedule.levels):
        raise ScheduleError(f"schedule has {len(schedule.levels)} levels, depth {depth} requested")
    _check_window(window)

    width: Fraction = window.length  # type: ignore[assignment]
    ledger, projected = _ledger(schedule, depth, width)
    allowed = schedule.budget * width
    if ledger.removed > allowed:
        raise BudgetExceededError(
            f"removed measure {ledger.removed} exceeds budget {allowed}",
            overshoot=ledger.removed - allowed,
        )

    census = _census(schedule, depth, width)
    stage = CantorStage(
        depth=depth,
        schedule=schedule,
        window=window,
        ledger=ledger,
        census=census,
        projected_parts=projected,
    )

    if materialize is None:
        materialize = projected <= get_settings().compute.materialize_limit
    if materialize:
        stage._open, stage._components = _materialize(schedule, depth, window)
    logger.debug(
        "built depth-%d stage on %s: removed %s, %d projected parts, materialized=%s",
        depth,
        window,
        ledger.removed,
        projected,
        stage.materialized,
    )
    return stage


def _materialize(
    schedule: LevelSchedule, depth: int, window: Interval
) -> Tuple[IntervalSet, List[FComponent]]:
    open_parts: List[Interval] = []
    current = [FComponent(window, 0, 0, window)]
    for n in range(1, depth + 1):
        level = schedule.levels[n - 1]
        nxt: List[FComponent] = []
        for comp in current:
            pieces, tagged = level_pattern(comp.interval.lo, comp.interval.hi, level)  # type: ignore[arg-type]
            open_parts.extend(pieces)
            nxt.extend(FComponent(iv, m, n, comp.interval) for iv, m in tagged)
        logger.debug("generation %d: %d components", n, len(nxt))
        current = nxt
    final = current if depth > 0 else []
    return canonicalize(open_parts), final


# ---------------------------------------------------------------------------
# Full-measure tiling
# ---------------------------------------------------------------------------

def tile_weights(copies: int) -> List[Fraction]:
    """Widths proportional to 2^-1, …, 2^-copies, normalized to sum to 1."""
    if copies < 1:
        raise ScheduleError(f"copies must be positive, got {copies}")
    norm = 1 - Fraction(1, 2**copies)
    return [Fraction(1, 2**j) / norm for j in range(1, copies + 1)]


def tile_budget(epsilon: Fraction, copies: int) -> Fraction:
    """
    Removal budget shared by every tile, relative to the tile's width.

    Tile j then removes at most epsilon·2^-j of the window. A single tile
    keeps the whole epsilon.
    """
    epsilon = Fraction(epsilon)
    if copies == 1:
        return epsilon
    return epsilon * (1 - Fraction(1, 2**copies))


def generation_shares(epsilon: Fraction, depth: int) -> List[Fraction]:
    """epsilon·2^-n / (1 − 2^-depth) for n = 1..depth; they sum to epsilon."""
    norm = 1 - Fraction(1, 2**depth)
    return [epsilon * Fraction(1, 2**n) / norm for n in range(1, depth + 1)]


def tile_schedule(budget: Fraction, depth: int, max_level: int = DEFAULT_MAX_LEVEL) -> LevelSchedule:
    """Least levels whose generations stay inside the budget's shares."""
    levels = [minimal_level(share) for share in generation_shares(budget, depth)] if depth else []
    if any(level > max_level for level in levels):
        raise InfeasibleBudgetError(
            f"budget {budget} at depth {depth} needs levels above the cap {max_level}", levels
        )
    return LevelSchedule(tuple(levels), budget)


def build_full_measure_sosd(
    window: Interval,
    epsilon: Fraction,
    copies: int,
    depth: int,
    max_level: int = DEFAULT_MAX_LEVEL,
    materialize: Optional[bool] = None,
) -> FullMeasureStage:
    """
    Tile the window with Cantor stages; tile j removes at most
    epsilon·2^-j·|window|, so the total stays below epsilon·|window|.
    """
    epsilon = Fraction(epsilon)
    if not (0 < epsilon < 1):
        raise ScheduleError(f"epsilon must lie in (0, 1), got {epsilon}")
    if depth < 0:
        raise ScheduleError(f"depth must be non-negative, got {depth}")
    _check_window(window)

    weights = tile_weights(copies)
    schedule = tile_schedule(tile_budget(epsilon, copies), depth, max_level)

    width: Fraction = window.length  # type: ignore[assignment]
    lo: Fraction = window.lo  # type: ignore[assignment]
    tiles: List[CantorStage] = []
    excluded: List[Tuple[Fraction, ...]] = []
    for j, weight in enumerate(weights):
        hi = window.hi if j == copies - 1 else lo + weight * width
        tile = Interval.closed(lo, hi)
        tiles.append(build_f_infinity(schedule, depth, materialize, tile))
        excluded.append((lo,) if j > 0 else ())
        logger.debug("tile %d: %s, levels %s", j + 1, tile, schedule.levels)
        lo = hi  # type: ignore[assignment]
    return FullMeasureStage(window, epsilon, copies, depth, tiles, excluded)


def tile_sets(assembly: FullMeasureStage) -> List[IntervalSet]:
    """Pairwise disjoint closed sets of the tiles."""
    out: List[IntervalSet] = []
    for stage, dropped in zip(assembly.tiles, assembly.excluded):
        closed = stage.closed_set
        if dropped:
            closed = difference(closed, canonicalize([Interval.point(p) for p in dropped]))
        out.append(closed)
    return out


def union_of_stages(stages: Sequence[CantorStage] | FullMeasureStage) -> IntervalSet:
    if isinstance(stages, FullMeasureStage):
        sets = tile_sets(stages)
    else:
        sets = [s.closed_set for s in stages]
    acc = IntervalSet.empty()
    for s in sets:
        acc = union(acc, s)
    return acc


def sample_union_points(
    stages: Sequence[CantorStage] | FullMeasureStage, count: int, seed: int
) -> List[Fraction]:
    """Seeded draw of midpoints of tag-1 ℱ-components of the first generation."""
    tiles = stages.tiles if isinstance(stages, FullMeasureStage) else list(stages)
    midpoints: List[Fraction] = []
    for stage in tiles:
        if stage.depth == 0:
            continue
        _, tagged = level_pattern(stage.window.lo, stage.window.hi, 1)  # type: ignore[arg-type]
        midpoints.extend(iv.midpoint for iv, _ in tagged)
    if not midpoints:
        return []
    midpoints.sort()
    rng = random.Random(seed)
    if count <= len(midpoints):
        picked = rng.sample(midpoints, count)
    else:
        picked = [rng.choice(midpoints) for _ in range(count)]
    return sorted(picked)
