from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..errors import FormatError


def to_plain(obj: Any) -> Any:
    """
    Convert objects into JSON-serializable, deterministic structures.

    Fractions become "p/q" strings; nothing is ever rounded.
    """
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_dict"):
        return to_plain(obj.to_dict())
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_plain(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if obj is None or isinstance(obj, (str, int, float, bool)):
        return obj
    # infinities and intervals render through their str()
    return str(obj)


def json_dumps(obj: Any) -> str:
    return json.dumps(to_plain(obj), ensure_ascii=False, separators=(",", ":"), sort_keys=True)


def json_pretty(obj: Any) -> str:
    return json.dumps(to_plain(obj), ensure_ascii=False, indent=2, sort_keys=True)


def json_loads(s: str) -> Any:
    try:
        return json.loads(s)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    return json_loads(text)


def write_text(path: str | Path, text: str) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")


def stable_hash(obj: Any) -> str:
    encoded = json_dumps(obj).encode("utf-8")
    return hashlib.sha256(encoded).hexdigest()
