"""Convex sets with rich differences: constructions, exact statistics, exhaustive checks."""

__version__ = "0.1.0"

from .constructions import ConstructionResult, GluedResult, construct, default_delta, glue
from .convex import (
    ConvexityError,
    ConvexSet,
    NotConvexError,
    NotSortedError,
    dilate_to_integers,
    from_gap_sequence,
    gaps,
    load_set,
    scale,
    translate,
    validate_convex,
)
from .errors import BoundViolation, InvariantViolation, WitnessStructureError
from .numeric import compare, format_rational, lcm_of_denominators, parse_rational
from .oracle import RepWitness, SearchReport, enumerate_convex, verify_bound, witnesses
from .stats import DiffStats, diff_stats, max_rep_diff, rep_diff, rep_sum, rich_count
