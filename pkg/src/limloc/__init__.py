"""Strategy-proof facility location when facilities are limited to feasible sub-intervals of [0, 1].

All arithmetic is exact (:class:`fractions.Fraction`).
"""

from limloc.core import (
    FeasibleRegion,
    Instance,
    Placement,
    TieBreak,
    contains,
    format_rational,
    nearest_feasible,
    normalize_instance,
    parse_rational,
)
from limloc.mechanisms import (
    LEFTMOST,
    MEDIAN,
    MID_OR_NEAREST,
    RIGHTMOST,
    CustomMechanism,
    EndPointStar,
    GenMedianStar,
    PhantomProfile,
    UnrestrictedGenMedian,
    gen_median,
    median_of,
    run,
    run_endpoint_star,
    run_single_star,
)
from limloc.objectives import Objective, distance_to_placement, evaluate
from limloc.optimum import OptResult, candidate_points, grid_optimal, optimal, optimal_single, optimal_two

__version__ = "0.1.0"
