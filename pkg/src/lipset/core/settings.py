"""
Central configuration for lipset.

Deliberately minimal:
- No schema enforcement
- Explicit defaults
- Environment-driven only

CLI flags override these values per invocation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache


def _int(env: str, default: int) -> int:
    try:
        return int(os.getenv(env, default))
    except ValueError:
        return default


def _choice(env: str, default: str, allowed: tuple[str, ...]) -> str:
    v = os.getenv(env, default).strip().lower()
    return v if v in allowed else default


# --------------------------------------------------
# Settings models (plain dataclasses)
# --------------------------------------------------

@dataclass(frozen=True)
class LoggingSettings:
    level: str
    format: str


@dataclass(frozen=True)
class ComputeSettings:
    max_worker_threads: int
    materialize_limit: int
    decimal_digits: int
    default_seed: int


@dataclass(frozen=True)
class LipsetSettings:
    logging: LoggingSettings
    compute: ComputeSettings


# --------------------------------------------------
# Loader
# --------------------------------------------------

@lru_cache(maxsize=1)
def get_settings() -> LipsetSettings:
    return LipsetSettings(
        logging=LoggingSettings(
            level=os.getenv("LIPSET_LOG_LEVEL", "WARNING"),
            format=_choice("LIPSET_LOG_FORMAT", "text", ("text", "json")),
        ),
        compute=ComputeSettings(
            max_worker_threads=max(1, _int("LIPSET_MAX_WORKER_THREADS", 4)),
            materialize_limit=_int("LIPSET_MATERIALIZE_LIMIT", 60000),
            decimal_digits=max(1, _int("LIPSET_DECIMAL_DIGITS", 12)),
            default_seed=_int("LIPSET_DEFAULT_SEED", 42),
        ),
    )
