"""
CSV rendering for exact result tables.

Exact columns are written as "p/q"; optional decimal twins get a `_dec`
suffix and are rendered only here, never fed back into computation.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence

from ..core.settings import get_settings
from .rationals import to_decimal


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    decimal_columns: Sequence[str] = (),
    digits: Optional[int] = None,
) -> str:
    """
    Render rows as CSV text with "\\n" line endings.

    Every column named in `decimal_columns` gets a `<name>_dec` column
    appended after the exact ones, rendered with `digits` significant
    digits (LIPSET_DECIMAL_DIGITS when None).
    """
    digits = digits or get_settings().compute.decimal_digits
    positions = [header.index(name) for name in decimal_columns]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header) + [f"{name}_dec" for name in decimal_columns])
    for row in rows:
        out: List[str] = [_cell(v) for v in row]
        for pos in positions:
            v = row[pos]
            out.append(to_decimal(v, digits) if isinstance(v, Fraction) else _cell(v))
        w.writerow(out)
    return buf.getvalue()
