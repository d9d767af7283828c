"""
Sample chains, schedules and sets shipped with the package.
"""

from __future__ import annotations

from importlib import resources
from typing import Any, List

from ..cantor.models import LevelSchedule
from ..construction import NestedChain, chain_from_dict
from ..errors import FormatError
from ..intervals import IntervalSet, set_from_dict
from ..utils.json import json_loads

CHAINS = ("unit", "two_step", "half_lines", "disjoint_steps")
SCHEDULES = ("default", "small", "single")
SETS = ("level1", "two_blocks", "gappy")


def _read(filename: str) -> Any:
    try:
        text = resources.files(__name__).joinpath(filename).read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise FormatError(f"no bundled file {filename!r}") from e
    return json_loads(text)


def bundled_names() -> List[str]:
    return (
        [f"chain:{n}" for n in CHAINS]
        + [f"schedule:{n}" for n in SCHEDULES]
        + [f"set:{n}" for n in SETS]
    )


def bundled_chain(name: str, nest: bool = False, diagnose: bool = False) -> NestedChain:
    """A shipped chain, validated like a chain file (`disjoint_steps` needs nest)."""
    return chain_from_dict(_read(f"chain_{name}.json"), nest=nest, diagnose=diagnose)


def bundled_schedule(name: str) -> LevelSchedule:
    return LevelSchedule.from_dict(_read(f"schedule_{name}.json"))


def bundled_set(name: str) -> IntervalSet:
    return set_from_dict(_read(f"set_{name}.json"))
