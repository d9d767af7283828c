"""
Invariant verification.

- Typed check results with the condition they violate
- Reports with a deterministic fingerprint
- The seeded suite run by `lipset verify`
"""

from .models import CheckResult, CheckStatus, VerificationReport
from .suite import SUITE_NAMES, SuiteContext, random_interval_set, run_suite

__all__ = [
    "CheckResult",
    "CheckStatus",
    "VerificationReport",
    "SUITE_NAMES",
    "SuiteContext",
    "random_interval_set",
    "run_suite",
]
