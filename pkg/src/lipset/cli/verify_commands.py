"""
Invariant suite command.

Exit codes:
  0 - every check passed
  1 - at least one check failed
"""

from __future__ import annotations

import sys

from ..utils.json import json_pretty
from ..verification import run_suite
from .config import RunConfig, rule_from_args
from .output import emit


def verify(args, config: RunConfig) -> int:
    rule = rule_from_args(args)
    report = run_suite(
        suite=args.suite,
        seed=config.seed,
        depth=args.depth,
        rule=rule,
        samples=args.samples,
    )
    emit(json_pretty(report.to_dict()), config.out)

    if not report.passed and not config.quiet:
        for result in report.get_failed():
            print(f"FAILED {result}", file=sys.stderr)
    return 0 if report.passed else 1
