"""
Set-description JSON codec.

    {"parts": [{"lo": "p/q" | "-inf", "hi": "p/q" | "+inf",
                "lo_closed": bool, "hi_closed": bool}, ...]}

Parsing canonicalizes; serialization emits canonical form.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List

from ..errors import FormatError, IntervalError
from ..utils.json import json_pretty, load_json, write_text
from ..utils.rationals import parse_rational
from .algebra import canonicalize
from .models import NEG_INF, POS_INF, ExtendedPoint, Interval, IntervalSet, is_finite

_NEG_TOKENS = ("-inf", "-infinity")
_POS_TOKENS = ("+inf", "inf", "+infinity", "infinity")


def point_to_str(p: ExtendedPoint) -> str:
    return str(p)


def point_from_json(value: Any) -> ExtendedPoint:
    if isinstance(value, str):
        token = value.strip().lower()
        if token in _NEG_TOKENS:
            return NEG_INF
        if token in _POS_TOKENS:
            return POS_INF
    return parse_rational(value)


def interval_to_dict(iv: Interval) -> Dict[str, Any]:
    return {
        "lo": point_to_str(iv.lo),
        "hi": point_to_str(iv.hi),
        "lo_closed": iv.lo_closed,
        "hi_closed": iv.hi_closed,
    }


def set_to_dict(a: IntervalSet) -> Dict[str, Any]:
    return {"parts": [interval_to_dict(p) for p in a.parts]}


def set_from_dict(data: Any) -> IntervalSet:
    if not isinstance(data, dict) or not isinstance(data.get("parts"), list):
        raise FormatError('set description must be an object with a "parts" list')
    raw: List[Interval] = []
    for index, item in enumerate(data["parts"]):
        if not isinstance(item, dict):
            raise FormatError(f"part #{index} must be an object")
        try:
            lo = point_from_json(item["lo"])
            hi = point_from_json(item["hi"])
            lo_closed = bool(item.get("lo_closed", True)) and is_finite(lo)
            hi_closed = bool(item.get("hi_closed", True)) and is_finite(hi)
        except KeyError as e:
            raise FormatError(f"part #{index} is missing {e.args[0]!r}") from e
        try:
            raw.append(Interval(lo, hi, lo_closed, hi_closed))
        except IntervalError as e:
            raise IntervalError(str(e), index=index) from e
    return canonicalize(raw)


def load_set(path: str | Path) -> IntervalSet:
    return set_from_dict(load_json(path))


def dump_set(a: IntervalSet, path: str | Path) -> None:
    write_text(path, json_pretty(set_to_dict(a)) + "\n")
