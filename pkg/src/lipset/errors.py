from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence


class ErrorCode(str, Enum):
    INVALID_INTERVAL = "INVALID_INTERVAL"
    INVALID_WINDOW = "INVALID_WINDOW"
    NOT_CLOSED = "NOT_CLOSED"
    INVALID_CHAIN = "INVALID_CHAIN"
    INVALID_DENSITY_QUERY = "INVALID_DENSITY_QUERY"
    BREAKPOINT_RULE = "BREAKPOINT_RULE"
    INVALID_ESTIMATION_QUERY = "INVALID_ESTIMATION_QUERY"
    INVALID_SCHEDULE = "INVALID_SCHEDULE"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    BUDGET_INFEASIBLE = "BUDGET_INFEASIBLE"
    NOT_MATERIALIZED = "NOT_MATERIALIZED"
    FORMAT_ERROR = "FORMAT_ERROR"


class LipsetError(Exception):
    """Base lipset error."""

    code: ErrorCode = ErrorCode.FORMAT_ERROR


class IntervalError(LipsetError):
    """Malformed interval or interval-set input."""

    code = ErrorCode.INVALID_INTERVAL

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        if index is not None:
            message = f"interval #{index}: {message}"
        super().__init__(message)
        self.index = index


class WindowError(LipsetError):
    """Window is unbounded or otherwise unusable for a restricted measure."""

    code = ErrorCode.INVALID_WINDOW


class NotClosedError(LipsetError):
    """A closed set was required."""

    code = ErrorCode.NOT_CLOSED


class ChainError(LipsetError):
    """Nested chain rejected; `stage` is 1-based."""

    code = ErrorCode.INVALID_CHAIN

    def __init__(self, message: str, stage: int) -> None:
        super().__init__(f"stage {stage}: {message}")
        self.stage = stage


class DensityError(LipsetError):
    """Invalid radius, radius list or evaluation point."""

    code = ErrorCode.INVALID_DENSITY_QUERY


class BreakpointRuleError(LipsetError):
    """A breakpoint rule produced a point outside its contiguous interval."""

    code = ErrorCode.BREAKPOINT_RULE


class EstimationError(LipsetError):
    """Invalid oscillation query or scan parameters."""

    code = ErrorCode.INVALID_ESTIMATION_QUERY


class ScheduleError(LipsetError):
    """Level schedule is malformed or too short."""

    code = ErrorCode.INVALID_SCHEDULE


class BudgetExceededError(ScheduleError):
    """Removed measure exceeds the schedule budget by `overshoot` (exact)."""

    code = ErrorCode.BUDGET_EXCEEDED

    def __init__(self, message: str, overshoot: Fraction) -> None:
        super().__init__(f"{message} (overshoot {overshoot})")
        self.overshoot = overshoot


class InfeasibleBudgetError(ScheduleError):
    """No admissible level meets the requested measure budget."""

    code = ErrorCode.BUDGET_INFEASIBLE

    def __init__(self, message: str, required_levels: Sequence[int]) -> None:
        levels = ", ".join(str(level) for level in required_levels)
        super().__init__(f"{message} (required levels: {levels})")
        self.required_levels = tuple(required_levels)


class StageNotMaterializedError(LipsetError):
    """Geometric data requested from a ledger-only Cantor stage."""

    code = ErrorCode.NOT_MATERIALIZED


class FormatError(LipsetError):
    """Malformed rational, JSON document or CSV input."""

    code = ErrorCode.FORMAT_ERROR
