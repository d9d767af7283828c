from .json import json_dumps, json_loads, json_pretty, load_json, stable_hash, to_plain, write_text
from .rationals import floor_pow2, format_rational, parse_rational, random_rational, to_decimal
from .tables import render_csv

__all__ = [
    "json_dumps",
    "json_loads",
    "json_pretty",
    "load_json",
    "stable_hash",
    "to_plain",
    "write_text",
    "floor_pow2",
    "format_rational",
    "parse_rational",
    "random_rational",
    "to_decimal",
    "render_csv",
]
