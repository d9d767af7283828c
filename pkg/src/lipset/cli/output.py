"""
CLI output formatting utilities.

Everything goes to stdout unless -o/--out names a file.
"""

from __future__ import annotations

import sys
from typing import Any, Dict, List, Optional, Sequence

from ..utils.json import json_pretty, to_plain, write_text
from ..utils.tables import render_csv


def emit(text: str, out: Optional[str] = None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def output_json(data: Any, out: Optional[str] = None) -> None:
    emit(json_pretty(data), out)


def format_table(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
    if not rows:
        return ""
    cells = [{col: str(to_plain(row.get(col, ""))) for col in columns} for row in rows]
    widths = {col: len(col) for col in columns}
    for row in cells:
        for col in columns:
            widths[col] = max(widths[col], len(row[col]))

    header = " | ".join(col.ljust(widths[col]) for col in columns)
    lines = [header, "-" * len(header)]
    for row in cells:
        lines.append(" | ".join(row[col].ljust(widths[col]) for col in columns))
    return "\n".join(lines)


def output_table(rows: List[Dict[str, Any]], columns: Sequence[str], out: Optional[str] = None) -> None:
    emit(format_table(rows, columns), out)


def output_rows(
    rows: List[Dict[str, Any]],
    columns: Sequence[str],
    fmt: str,
    out: Optional[str] = None,
    decimals: Optional[int] = None,
    decimal_columns: Sequence[str] = (),
) -> None:
    """Emit homogeneous rows as csv, json or an aligned table."""
    if fmt == "csv":
        emit(
            render_csv(
                columns,
                [[row.get(col) for col in columns] for row in rows],
                decimal_columns if decimals else (),
                decimals,
            ),
            out,
        )
    elif fmt == "table":
        output_table(rows, columns, out)
    else:
        output_json(rows, out)
