"""Exact rich-line detection, exact fitting and Line Cover kernelization."""

from .fitting import FitResult, exact_fit
from .geometry import (
    COORD_LIMIT,
    CanonicalLine,
    CoordinateBoundError,
    DuplicatePointError,
    GeometryError,
    IdenticalPointsError,
    Point,
    PointSet,
    PreconditionError,
    contains,
    covered_subset,
    incidence_bound,
    incidences,
    line_through,
)
from .io import ParseError, parse_lines, parse_points, write_lines, write_points
from .kernel import (
    KernelResult,
    SaturatedLinesResult,
    SaturationSchedule,
    StopReason,
    Variant,
    Verdict,
    build_schedule,
    kernelize,
    kernelize_small,
    saturated_lines,
)
from .oracles import (
    CoverInstance,
    GroundTruth,
    gen_general_position,
    gen_grid,
    gen_planted_cover,
    gen_planted_rich,
    solve_cover,
)
from .rich import (
    RandomizedParams,
    Regime,
    RichLineReport,
    compute_params,
    rich_lines,
    rich_lines_brute,
    rich_lines_det,
    rich_lines_rand,
)
from .sampling import Rng, sample_pairs, sample_without_replacement

import types as _types

__all__ = sorted(
    name for name, obj in globals().items()
    if not name.startswith("_") and not isinstance(obj, _types.ModuleType)
)
