"""
Pointwise lip/Lip estimation commands.
"""

from __future__ import annotations

from ..construction import LipFunction
from ..errors import EstimationError
from ..estimation import LipEstimator, estimates_to_csv
from .config import RunConfig, resolve_chain, rule_from_args
from .output import emit, output_json, output_rows

SUMMARY_COLUMNS = ("x", "lip_lower", "lip_upper", "Lip_lower", "Lip_upper")


def lipscan(args, config: RunConfig) -> int:
    if not args.point:
        raise EstimationError("give at least one --point")
    chain = resolve_chain(args.chain, nest=args.nest)
    f = LipFunction(chain, rule_from_args(args))
    estimator = LipEstimator(
        f, ratio=args.ratio, refinement=args.refinement, parallel=args.parallel
    )
    estimates = estimator.scan_points(args.point, args.rmax, args.rmin)

    if config.format == "csv":
        emit(estimates_to_csv(estimates, config.decimals), config.out)
    elif config.format == "table":
        output_rows([e.to_dict() for e in estimates], SUMMARY_COLUMNS, "table", config.out)
    else:
        output_json([e.to_dict() for e in estimates], config.out)
    return 0
