"""
lipset CLI - command-line interface over the exact constructions.

Commands:
- lipset set {union,intersect,complement,measure,distance,contiguous}
- lipset build <chain> [--eval X ...] [--grid LO HI N]
- lipset profile <set> --point X [--radii ... | --scan --rmin --rmax]
- lipset lipscan <chain> --point X ...
- lipset cantor {level,stage,windows,full}
- lipset verify [--suite NAME]

Output:
- JSON (rationals as "p/q"), CSV or aligned tables
- Deterministic ordering
"""

from .main import create_parser, main, run

__all__ = ["create_parser", "main", "run"]
