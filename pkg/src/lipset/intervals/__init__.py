"""
Exact interval-set algebra.

- Rational endpoints with explicit infinities and open/closed flags
- Canonical sets: sorted, disjoint, non-adjacent parts
- Lebesgue measure, restricted measure, distance, contiguous intervals
"""

from .models import (
    NEG_INF,
    POS_INF,
    ExtendedPoint,
    Interval,
    IntervalSet,
    Measure,
    is_finite,
    make_interval,
)
from .algebra import (
    canonicalize,
    complement,
    complement_in,
    contains,
    contiguous_intervals,
    difference,
    distance,
    intersect,
    is_closed,
    is_subset,
    locate_contiguous,
    measure,
    measure_in,
    scale_translate,
    union,
)
from .codec import dump_set, load_set, set_from_dict, set_to_dict

__all__ = [
    "NEG_INF",
    "POS_INF",
    "ExtendedPoint",
    "Interval",
    "IntervalSet",
    "Measure",
    "is_finite",
    "make_interval",
    "canonicalize",
    "complement",
    "complement_in",
    "contains",
    "contiguous_intervals",
    "difference",
    "distance",
    "intersect",
    "is_closed",
    "is_subset",
    "locate_contiguous",
    "measure",
    "measure_in",
    "scale_translate",
    "union",
    "dump_set",
    "load_set",
    "set_from_dict",
    "set_to_dict",
]
