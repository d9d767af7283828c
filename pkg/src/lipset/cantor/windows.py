"""
Density windows around final-generation ℱ-components.

For a component [p−t, p+t] with tag m, the reference set is the union of the
components of tag ≤ m that the same generation placed in the same window.
Its gaps (p−7t, p−t) and (p+t, p+7t) are free of reference mass, so for x in
the component both windows [x−4t, x] and [x, x+4t] carry at most 2t of it.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..errors import ScheduleError
from ..intervals import Interval, IntervalSet, canonicalize, measure_in
from ..utils.tables import render_csv
from .models import CantorStage, DensityWindowReport, FComponent, WindowCheckRow

logger = logging.getLogger("lipset.cantor")

MODES = ("sample", "critical")


def _reference_sets(
    components: Sequence[FComponent],
) -> Dict[Tuple[Interval, int], IntervalSet]:
    by_window: Dict[Interval, List[FComponent]] = defaultdict(list)
    for comp in components:
        by_window[comp.window].append(comp)
    out: Dict[Tuple[Interval, int], IntervalSet] = {}
    for window, comps in by_window.items():
        for m in sorted({c.level for c in comps}):
            out[(window, m)] = canonicalize([c.interval for c in comps if c.level <= m])
    return out


def _sample_points(comp: FComponent) -> List[Fraction]:
    p, t = comp.center, comp.half_length
    return [p - t, p - t / 2, p, p + t / 2, p + t]


def _critical_points(comp: FComponent, reference: IntervalSet) -> List[Fraction]:
    p, t = comp.center, comp.half_length
    lo, hi = p - t, p + t
    points: Set[Fraction] = set(_sample_points(comp))
    for e in reference.endpoints:
        for x in (e, e - 4 * t, e + 4 * t):
            if lo <= x <= hi:
                points.add(x)
    return sorted(points)


def density_window_check(stage: CantorStage, mode: str = "sample") -> DensityWindowReport:
    """
    Reference-set densities in [x−4t, x] and [x, x+4t] for the final
    generation's components; PASS iff every density is at most 1/2.
    """
    if mode not in MODES:
        raise ScheduleError(f"unknown window-check mode {mode!r}")
    report = DensityWindowReport(mode=mode)
    if stage.depth == 0:
        return report

    components = stage.f_components
    references = _reference_sets(components)
    for comp in components:
        reference = references[(comp.window, comp.level)]
        t = comp.half_length
        width = 4 * t
        if mode == "critical":
            points = _critical_points(comp, reference)
        else:
            points = _sample_points(comp)
        for x in points:
            left = measure_in(reference, Interval.closed(x - width, x)) / width
            right = measure_in(reference, Interval.closed(x, x + width)) / width
            report.rows.append(WindowCheckRow(comp.interval, comp.level, x, "left", left))
            report.rows.append(WindowCheckRow(comp.interval, comp.level, x, "right", right))

    logger.debug(
        "window check (%s): %d rows, max density %s",
        mode,
        len(report.rows),
        report.max_density,
    )
    return report


WINDOW_HEADER = ("component_lo", "component_hi", "level", "x", "side", "density")


def window_report_to_csv(report: DensityWindowReport, decimals: Optional[int] = None) -> str:
    rows = [
        (row.component.lo, row.component.hi, row.level, row.x, row.side, row.density)
        for row in report.rows
    ]
    dec = ("density",) if decimals else ()
    return render_csv(WINDOW_HEADER, rows, dec, decimals)
