"""
Set algebra commands.
"""

from __future__ import annotations

from ..intervals import (
    Interval,
    complement,
    complement_in,
    contiguous_intervals,
    distance,
    intersect,
    measure,
    measure_in,
    set_to_dict,
    union,
)
from ..intervals.codec import interval_to_dict
from .config import RunConfig, resolve_set
from .output import emit, output_json, output_rows


def _window(args):
    if args.window is None:
        return None
    lo, hi = args.window
    return Interval.closed(lo, hi)


def set_union(args, config: RunConfig) -> int:
    output_json(set_to_dict(union(resolve_set(args.a), resolve_set(args.b))), config.out)
    return 0


def set_intersect(args, config: RunConfig) -> int:
    output_json(set_to_dict(intersect(resolve_set(args.a), resolve_set(args.b))), config.out)
    return 0


def set_complement(args, config: RunConfig) -> int:
    a = resolve_set(args.a)
    window = _window(args)
    result = complement(a) if window is None else complement_in(a, window)
    output_json(set_to_dict(result), config.out)
    return 0


def set_measure(args, config: RunConfig) -> int:
    a = resolve_set(args.a)
    window = _window(args)
    value = measure(a) if window is None else measure_in(a, window)
    if config.format == "text":
        emit(str(value), config.out)
    elif config.format == "json":
        output_json({"measure": str(value)}, config.out)
    else:
        rows = [{"measure": value}]
        output_rows(rows, ("measure",), config.format, config.out, config.decimals, ("measure",))
    return 0


def set_distance(args, config: RunConfig) -> int:
    a = resolve_set(args.a)
    rows = [{"x": x, "distance": distance(x, a)} for x in args.point]
    if config.format == "text":
        emit("\n".join(str(row["distance"]) for row in rows), config.out)
        return 0
    output_rows(rows, ("x", "distance"), config.format, config.out, config.decimals, ("distance",))
    return 0


def set_contiguous(args, config: RunConfig) -> int:
    parts = contiguous_intervals(resolve_set(args.a))
    output_json({"contiguous": [interval_to_dict(iv) for iv in parts]}, config.out)
    return 0
