"""
Oscillation estimator - rigorous enclosures of M_f(x, r), lip f and Lip f.
"""

from __future__ import annotations

import concurrent.futures
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from ..construction import LipFunction, eval_f
from ..core.settings import get_settings
from ..errors import EstimationError
from ..utils.tables import render_csv
from .models import LipEstimate, OscillationQuery, RadiusRow

logger = logging.getLogger("lipset.estimation")

DEFAULT_RATIO = Fraction(1, 2)
DEFAULT_REFINEMENT = 64


def m_f(f: LipFunction, query: OscillationQuery) -> Tuple[Fraction, Fraction]:
    """
    Enclosure (lower, upper) of M_f(x, r).

    f is evaluated on the refinement+1 grid points of [x−r, x] and of
    [x, x+r]; lower is the largest grid oscillation over r.
    """
    x, r, n = query.x, query.r, query.refinement
    fx = eval_f(f, x)
    step = query.step
    best = Fraction(0)
    for i in range(1, n + 1):
        for y in (x - i * step, x + i * step):
            diff = abs(eval_f(f, y) - fx)
            if diff > best:
                best = diff
    lower = best / r
    return lower, lower + query.slack


def scan_radii(r_max: Fraction, r_min: Fraction, ratio: Fraction) -> List[Fraction]:
    r_max, r_min, ratio = Fraction(r_max), Fraction(r_min), Fraction(ratio)
    if not (0 < r_min < r_max):
        raise EstimationError(f"need 0 < r_min < r_max, got r_min={r_min}, r_max={r_max}")
    if not (0 < ratio < 1):
        raise EstimationError(f"ratio must lie in (0, 1), got {ratio}")
    radii: List[Fraction] = []
    r = r_max
    while r >= r_min:
        radii.append(r)
        r *= ratio
    return radii


def _summarize(
    x: Fraction,
    r_min: Fraction,
    r_max: Fraction,
    ratio: Fraction,
    refinement: int,
    rows: List[RadiusRow],
) -> LipEstimate:
    return LipEstimate(
        x=x,
        r_min=r_min,
        r_max=r_max,
        ratio=ratio,
        refinement=refinement,
        lip_lower=min(row.lower for row in rows),
        lip_upper=min(row.upper for row in rows),
        Lip_lower=max(row.lower for row in rows),
        Lip_upper=max(row.upper for row in rows),
        rows=rows,
    )


def lip_scan(
    f: LipFunction,
    x: Fraction,
    r_max: Fraction,
    r_min: Fraction,
    ratio: Fraction = DEFAULT_RATIO,
    refinement: int = DEFAULT_REFINEMENT,
) -> LipEstimate:
    """m_f over the radii r_max·ratioᵏ ≥ r_min, summarized as lip/Lip enclosures."""
    x = Fraction(x)
    radii = scan_radii(r_max, r_min, ratio)
    rows = []
    for r in radii:
        lower, upper = m_f(f, OscillationQuery(x, r, refinement))
        rows.append(RadiusRow(r, lower, upper))
    return _summarize(x, Fraction(r_min), Fraction(r_max), Fraction(ratio), refinement, rows)


class LipEstimator:
    """
    Reusable estimator bound to one LipFunction.

    With `parallel`, radii (and points) are spread over a thread pool; rows
    come back in radius order regardless of completion order.
    """

    def __init__(
        self,
        f: LipFunction,
        ratio: Fraction = DEFAULT_RATIO,
        refinement: int = DEFAULT_REFINEMENT,
        parallel: bool = False,
        max_workers: Optional[int] = None,
    ) -> None:
        self.f = f
        self.ratio = Fraction(ratio)
        self.refinement = refinement
        self.parallel = parallel
        self.max_workers = max_workers or get_settings().compute.max_worker_threads

    def m_f(self, x: Fraction, r: Fraction) -> Tuple[Fraction, Fraction]:
        return m_f(self.f, OscillationQuery(Fraction(x), Fraction(r), self.refinement))

    def _row(self, x: Fraction, r: Fraction) -> RadiusRow:
        lower, upper = self.m_f(x, r)
        return RadiusRow(r, lower, upper)

    def scan(self, x: Fraction, r_max: Fraction, r_min: Fraction) -> LipEstimate:
        x = Fraction(x)
        radii = scan_radii(r_max, r_min, self.ratio)
        if self.parallel and len(radii) > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                rows = list(executor.map(lambda r: self._row(x, r), radii))
        else:
            rows = [self._row(x, r) for r in radii]
        logger.debug("lip scan at %s over %d radii", x, len(rows))
        return _summarize(
            x, Fraction(r_min), Fraction(r_max), self.ratio, self.refinement, rows
        )

    def scan_points(
        self, points: Sequence[Fraction], r_max: Fraction, r_min: Fraction
    ) -> List[LipEstimate]:
        """One scan per point, returned sorted by point."""
        ordered = sorted(Fraction(p) for p in points)
        if self.parallel and len(ordered) > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                return list(executor.map(lambda p: self._serial_scan(p, r_max, r_min), ordered))
        return [self._serial_scan(p, r_max, r_min) for p in ordered]

    def _serial_scan(self, x: Fraction, r_max: Fraction, r_min: Fraction) -> LipEstimate:
        return lip_scan(self.f, x, r_max, r_min, self.ratio, self.refinement)


def scan_is_consistent(estimate: LipEstimate) -> bool:
    """r'·lower(r') ≤ r·upper(r) whenever r' ≤ r (sup-monotonicity of r·M_f)."""
    rows = sorted(estimate.rows, key=lambda row: row.r)
    best_lower = Fraction(0)
    for row in rows:
        best_lower = max(best_lower, row.r * row.lower)
        if best_lower > row.r * row.upper:
            return False
    return True


def estimates_to_csv(estimates: Iterable[LipEstimate], decimals: Optional[int] = None) -> str:
    """Per-radius rows followed by a summary block."""
    estimates = list(estimates)
    dec_rows = ("mf_lower", "mf_upper") if decimals else ()
    rows = [
        (est.x, row.r, row.lower, row.upper) for est in estimates for row in est.rows
    ]
    head = render_csv(("x", "r", "mf_lower", "mf_upper"), rows, dec_rows, decimals)
    summary = [
        (est.x, est.lip_lower, est.lip_upper, est.Lip_lower, est.Lip_upper) for est in estimates
    ]
    dec_summary = ("lip_lower", "lip_upper", "Lip_lower", "Lip_upper") if decimals else ()
    tail = render_csv(
        ("x", "lip_lower", "lip_upper", "Lip_lower", "Lip_upper"), summary, dec_summary, decimals
    )
    return head + "\n" + tail
