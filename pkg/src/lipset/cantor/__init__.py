"""
Cantor-type construction of a positive-measure closed set without closed
strongly one-sided dense subsets, and full-measure tilings of such sets.
"""

from .models import (
    OPEN_RATIO,
    CantorStage,
    ComponentClass,
    DensityWindowReport,
    FComponent,
    FullMeasureStage,
    GapCheck,
    LedgerEntry,
    LevelSchedule,
    MeasureLedger,
    WindowCheckRow,
    default_schedule,
)
from .levels import (
    component_tag,
    f_components,
    level1_open,
    level_measure,
    level_pattern,
    levelk_open,
    minimal_level,
    neighbor_gaps_open,
)
from .stages import (
    UNIT_WINDOW,
    build_f_infinity,
    build_full_measure_sosd,
    generation_shares,
    load_schedule,
    sample_union_points,
    tile_budget,
    tile_schedule,
    tile_sets,
    tile_weights,
    union_of_stages,
)
from .windows import density_window_check, window_report_to_csv

__all__ = [
    "OPEN_RATIO",
    "CantorStage",
    "ComponentClass",
    "DensityWindowReport",
    "FComponent",
    "FullMeasureStage",
    "GapCheck",
    "LedgerEntry",
    "LevelSchedule",
    "MeasureLedger",
    "WindowCheckRow",
    "default_schedule",
    "component_tag",
    "f_components",
    "level1_open",
    "level_measure",
    "level_pattern",
    "levelk_open",
    "minimal_level",
    "neighbor_gaps_open",
    "UNIT_WINDOW",
    "build_f_infinity",
    "build_full_measure_sosd",
    "generation_shares",
    "load_schedule",
    "sample_union_points",
    "tile_budget",
    "tile_schedule",
    "tile_sets",
    "tile_weights",
    "union_of_stages",
    "density_window_check",
    "window_report_to_csv",
]
