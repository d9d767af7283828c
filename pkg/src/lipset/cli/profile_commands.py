"""
Density profile and SOSD scan commands.
"""

from __future__ import annotations

from ..density import density_profile, profiles_to_csv, scans_to_csv, sosd_scan
from ..errors import DensityError
from .config import RunConfig, resolve_set
from .output import emit, output_json, output_rows


def profile_set(args, config: RunConfig) -> int:
    e = resolve_set(args.set)

    if args.scan:
        if args.rmin is None or args.rmax is None:
            raise DensityError("--scan needs --rmin and --rmax")
        reports = [
            sosd_scan(e, x, args.rmax, args.rmin, args.threshold, args.ratio) for x in args.point
        ]
        if config.format == "csv":
            emit(scans_to_csv(reports, config.decimals), config.out)
        elif config.format == "table":
            output_rows([r.to_dict() for r in reports], list(reports[0].to_dict()), "table", config.out)
        else:
            output_json([r.to_dict() for r in reports], config.out)
        return 0 if all(r.passed for r in reports) else 1

    if not args.radii:
        raise DensityError("give --radii or --scan")
    profiles = [density_profile(e, x, args.radii) for x in args.point]
    if config.format == "csv":
        emit(profiles_to_csv(profiles, config.decimals), config.out)
    elif config.format == "table":
        rows = [{"x": p.point, **row.to_dict()} for p in profiles for row in p.rows]
        output_rows(rows, ("x", "radius", "left", "right", "max"), "table", config.out)
    else:
        output_json([p.to_dict() for p in profiles], config.out)
    return 0
