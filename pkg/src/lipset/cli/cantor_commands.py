"""
Cantor-lab commands: level-k sets, F_inf stages, density windows and
full-measure assemblies.
"""

from __future__ import annotations

import logging

from ..cantor import (
    LevelSchedule,
    build_f_infinity,
    build_full_measure_sosd,
    default_schedule,
    density_window_check,
    levelk_open,
    sample_union_points,
    union_of_stages,
    window_report_to_csv,
)
from ..density import scans_to_csv, sosd_scan
from ..errors import DensityError, StageNotMaterializedError
from ..intervals import Interval, measure, set_to_dict
from .config import RunConfig, resolve_schedule
from .output import emit, output_json, output_rows

logger = logging.getLogger("lipset.cli")

DEFAULT_SCHEDULE_REF = "default"


def _schedule(ref: str, depth: int) -> LevelSchedule:
    if ref == DEFAULT_SCHEDULE_REF:
        return default_schedule(max(depth, 1))
    return resolve_schedule(ref)


def _materialize_flag(args):
    if args.materialize:
        return True
    if args.ledger_only:
        return False
    return None


def cantor_level(args, config: RunConfig) -> int:
    g = levelk_open(args.a, args.b, args.k)
    if config.format in ("csv", "table"):
        rows = [{"lo": iv.lo, "hi": iv.hi} for iv in g]
        output_rows(rows, ("lo", "hi"), config.format, config.out)
        return 0
    output_json({"k": args.k, "measure": str(measure(g)), "set": set_to_dict(g)}, config.out)
    return 0


def cantor_stage(args, config: RunConfig) -> int:
    schedule = _schedule(args.schedule, args.depth)
    stage = build_f_infinity(schedule, args.depth, materialize=_materialize_flag(args))
    data = stage.to_dict()
    if stage.materialized:
        data["closed_parts"] = len(stage.closed_set)
        data["f_components"] = len(stage.f_components)
    output_json(data, config.out)
    return 0


def cantor_windows(args, config: RunConfig) -> int:
    schedule = _schedule(args.schedule, args.depth)
    stage = build_f_infinity(schedule, args.depth, materialize=_materialize_flag(args))
    if not stage.materialized:
        raise StageNotMaterializedError(
            f"stage of depth {stage.depth} has {stage.projected_parts} projected parts, "
            f"above LIPSET_MATERIALIZE_LIMIT; pass --materialize to check its windows"
        )
    report = density_window_check(stage, mode=args.mode)
    logger.debug("window check: %d rows, max density %s", len(report.rows), report.max_density)
    if config.format == "csv":
        emit(window_report_to_csv(report, config.decimals), config.out)
    else:
        output_json(report.to_dict(), config.out)
    return 0 if report.passed else 1


def cantor_full(args, config: RunConfig) -> int:
    window = Interval.closed(args.window[0], args.window[1]) if args.window else Interval.closed(0, 1)
    assembly = build_full_measure_sosd(
        window,
        args.epsilon,
        args.copies,
        args.depth,
        materialize=True if args.points else None,
    )
    if not args.points:
        output_json(assembly.to_dict(), config.out)
        return 0

    if args.rmin is None or args.rmax is None:
        raise DensityError("--points needs --rmin and --rmax")
    e = union_of_stages(assembly)
    points = sample_union_points(assembly, args.points, config.seed)
    reports = [sosd_scan(e, x, args.rmax, args.rmin, args.threshold) for x in points]
    if config.format == "csv":
        emit(scans_to_csv(reports, config.decimals), config.out)
    else:
        data = assembly.to_dict()
        data["scans"] = [r.to_dict() for r in reports]
        output_json(data, config.out)
    return 0 if all(r.passed for r in reports) else 1
