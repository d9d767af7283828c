"""
Per-invocation configuration and input resolution.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..bundled import bundled_chain, bundled_schedule, bundled_set
from ..cantor import LevelSchedule, load_schedule
from ..construction import BreakpointRule, NestedChain, load_chain
from ..core.settings import get_settings
from ..errors import FormatError
from ..intervals import IntervalSet, load_set
from ..utils.rationals import parse_rational

BUNDLED_PREFIX = "bundled:"


def rational_arg(text: str) -> Fraction:
    """argparse type for exact rationals ("p/q", "p" or a decimal string)."""
    try:
        return parse_rational(text)
    except FormatError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


@dataclass(frozen=True)
class RunConfig:
    command: str
    out: Optional[str]
    seed: int
    format: str
    decimals: Optional[int]
    verbose: bool
    quiet: bool

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seed = args.seed if args.seed is not None else get_settings().compute.default_seed
        return cls(
            command=args.command,
            out=args.out,
            seed=seed,
            format=args.format or getattr(args, "default_format", None) or "json",
            decimals=(args.digits or get_settings().compute.decimal_digits) if args.decimals else None,
            verbose=args.verbose,
            quiet=args.quiet,
        )


def _bundled_name(ref: str) -> Optional[str]:
    return ref[len(BUNDLED_PREFIX):] if ref.startswith(BUNDLED_PREFIX) else None


def resolve_set(ref: str) -> IntervalSet:
    name = _bundled_name(ref)
    return bundled_set(name) if name else load_set(ref)


def resolve_chain(ref: str, nest: bool = False, diagnose: bool = False) -> NestedChain:
    name = _bundled_name(ref)
    if name:
        return bundled_chain(name, nest=nest, diagnose=diagnose)
    return load_chain(ref, nest=nest, diagnose=diagnose)


def resolve_schedule(ref: str) -> LevelSchedule:
    name = _bundled_name(ref)
    return bundled_schedule(name) if name else load_schedule(ref)


def rule_from_args(args: argparse.Namespace) -> BreakpointRule:
    return BreakpointRule(factor=args.factor, dyadic=not args.exact_steps)
