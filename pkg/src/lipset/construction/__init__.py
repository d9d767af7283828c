"""
Construction of f with lip f = 1_E from a nested chain of closed sets.

- Chain validation and normalization
- Breakpoint streams per (level, contiguous interval)
- Exact evaluation of f₁, f_n and f = Σ f_n
- Lipschitz and envelope certificates
"""

from .models import (
    DEFAULT_RULE,
    BreakpointRule,
    BreakpointRun,
    CertificateReport,
    ConditionCheck,
    EnvelopeReport,
    NestedChain,
)
from .breakpoints import BreakpointStream, breakpoint_conditions, next_breakpoint
from .chain import (
    chain_from_dict,
    chain_to_dict,
    diagnose_chain,
    dump_chain,
    load_chain,
    nest_chain,
    stages_from_dict,
    validate_chain,
)
from .function import (
    LipFunction,
    active_levels,
    constancy_radius,
    envelope_check,
    eval_f,
    eval_f1,
    eval_fn,
    evaluations_to_csv,
    expected_lip,
    lipschitz_certificate,
    stage_of,
)

__all__ = [
    "DEFAULT_RULE",
    "BreakpointRule",
    "BreakpointRun",
    "CertificateReport",
    "ConditionCheck",
    "EnvelopeReport",
    "NestedChain",
    "BreakpointStream",
    "breakpoint_conditions",
    "next_breakpoint",
    "chain_from_dict",
    "chain_to_dict",
    "diagnose_chain",
    "dump_chain",
    "load_chain",
    "nest_chain",
    "stages_from_dict",
    "validate_chain",
    "LipFunction",
    "active_levels",
    "constancy_radius",
    "envelope_check",
    "eval_f",
    "eval_f1",
    "eval_fn",
    "evaluations_to_csv",
    "expected_lip",
    "lipschitz_certificate",
    "stage_of",
]
