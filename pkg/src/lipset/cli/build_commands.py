"""
Chain validation and function evaluation commands.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from ..construction import LipFunction, eval_f
from .config import RunConfig, resolve_chain, rule_from_args
from .output import output_rows

logger = logging.getLogger("lipset.cli")


def grid_points(lo: Fraction, hi: Fraction, count: int) -> List[Fraction]:
    """count+1 equally spaced points from lo to hi."""
    if count < 1:
        return [lo]
    step = (hi - lo) / count
    return [lo + i * step for i in range(count + 1)]


def build_chain(args, config: RunConfig) -> int:
    chain = resolve_chain(args.chain, nest=args.nest, diagnose=args.diagnose)
    rule = rule_from_args(args)
    f = LipFunction(chain, rule, tolerance=args.tolerance)

    points: List[Fraction] = list(args.eval or [])
    if args.grid:
        lo, hi, n = args.grid
        points.extend(grid_points(lo, hi, int(n)))
    logger.debug("chain of depth %d, %d evaluation points", chain.depth, len(points))

    if not points:
        rows = [
            {"stage": n, "parts": len(s), "set": str(s)}
            for n, s in enumerate(chain.stages, start=1)
        ]
        output_rows(rows, ("stage", "parts", "set"), config.format, config.out)
        return 0

    rows = [{"x": x, "f": eval_f(f, x)} for x in points]
    output_rows(rows, ("x", "f"), config.format, config.out, config.decimals, ("f",))
    return 0
