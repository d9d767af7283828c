"""
Nested chain validation, normalization and the chain file codec.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Sequence

from ..density import SosdReport, sosd_scan
from ..errors import ChainError, FormatError
from ..intervals import IntervalSet, is_closed, is_subset, union
from ..intervals.codec import set_from_dict
from ..utils.json import json_pretty, load_json, write_text
from .models import NestedChain

logger = logging.getLogger("lipset.construction")

DIAGNOSE_R_MIN = Fraction(1, 1024)
DIAGNOSE_R_MAX = Fraction(1, 16)
DIAGNOSE_MAX_POINTS = 64


def validate_chain(stages: Sequence[IntervalSet], diagnose: bool = False) -> NestedChain:
    """
    Accept closed, nested stages with a nonempty first stage.

    With `diagnose`, SOSD scans at stage endpoints are logged as warnings;
    they never reject the chain.
    """
    if not stages:
        raise ChainError("a chain needs at least one stage", stage=1)
    for n, stage in enumerate(stages, start=1):
        if not is_closed(stage):
            raise ChainError(f"stage is not closed: {stage}", stage=n)
    if not stages[0]:
        raise ChainError("first stage is empty", stage=1)
    for n in range(1, len(stages)):
        if not is_subset(stages[n - 1], stages[n]):
            raise ChainError(f"stage {n} is not contained in stage {n + 1}", stage=n + 1)

    chain = NestedChain(tuple(stages))
    if diagnose:
        diagnose_chain(chain)
    return chain


def nest_chain(stages: Sequence[IntervalSet], diagnose: bool = False) -> NestedChain:
    """Replace E_n by E₁ ∪ … ∪ E_n, then validate."""
    nested: List[IntervalSet] = []
    acc = IntervalSet.empty()
    for stage in stages:
        acc = union(acc, stage)
        nested.append(acc)
    return validate_chain(nested, diagnose=diagnose)


def diagnose_chain(
    chain: NestedChain,
    r_min: Fraction = DIAGNOSE_R_MIN,
    r_max: Fraction = DIAGNOSE_R_MAX,
    max_points: int = DIAGNOSE_MAX_POINTS,
) -> List[SosdReport]:
    """SOSD scans at the first `max_points` endpoints of every stage."""
    reports: List[SosdReport] = []
    for n, stage in enumerate(chain.stages, start=1):
        points = sorted(set(stage.endpoints))[:max_points]
        for x in points:
            rep = sosd_scan(stage, x, r_max, r_min)
            reports.append(rep)
            if not rep.passed:
                logger.warning(
                    "stage %d fails the SOSD scan at %s (min max-density %s at r=%s)",
                    n,
                    x,
                    rep.min_max_density,
                    rep.worst_radius,
                    extra={"stage": n, "point": str(x)},
                )
    return reports


# ---------------------------------------------------------------------------
# Codec
# ---------------------------------------------------------------------------

def chain_to_dict(chain: NestedChain) -> dict:
    return chain.to_dict()


def stages_from_dict(data: Any) -> List[IntervalSet]:
    if not isinstance(data, dict) or not isinstance(data.get("stages"), list):
        raise FormatError('chain description must be an object with a "stages" list')
    return [set_from_dict(item) for item in data["stages"]]


def chain_from_dict(data: Any, nest: bool = False, diagnose: bool = False) -> NestedChain:
    stages = stages_from_dict(data)
    if nest:
        return nest_chain(stages, diagnose=diagnose)
    return validate_chain(stages, diagnose=diagnose)


def load_chain(path: str | Path, nest: bool = False, diagnose: bool = False) -> NestedChain:
    return chain_from_dict(load_json(path), nest=nest, diagnose=diagnose)


def dump_chain(chain: NestedChain, path: str | Path) -> None:
    write_text(path, json_pretty(chain_to_dict(chain)) + "\n")
