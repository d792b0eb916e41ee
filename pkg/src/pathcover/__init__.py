"""Cover the maximum number of graph vertices with vertex-disjoint long paths.

Two local-improvement solvers (a general one for any k >= 4 and a
five-operation refinement for k = 4), an exact subset-DP oracle for small
graphs, a planted-instance generator, and a benchmark harness.
"""

from .graph import (
    Cover,
    Extension,
    Graph,
    Path,
    load_graph,
    save_graph,
    split_long_path,
    validate_cover,
)
from .ops import (
    Move,
    apply_move,
    find_add,
    find_double_rep,
    find_extension,
    find_lookahead,
    find_recover,
    find_rep,
)
from .solvers import SolveResult, approx1, approx2, exact_max_cover, theoretical_ratio
from .instances import (
    Instance,
    SplitMix64,
    fixture_lower_bound_32,
    fixture_tight_ratio_24,
    generate,
    load_instance,
    save_instance,
)
from .bench import AggregateRow, ExperimentRecord, GridSpec, aggregate, run_grid

__all__ = [
    "AggregateRow",
    "Cover",
    "ExperimentRecord",
    "Extension",
    "Graph",
    "GridSpec",
    "Instance",
    "Move",
    "Path",
    "SolveResult",
    "SplitMix64",
    "aggregate",
    "apply_move",
    "approx1",
    "approx2",
    "exact_max_cover",
    "find_add",
    "find_double_rep",
    "find_extension",
    "find_lookahead",
    "find_recover",
    "find_rep",
    "fixture_lower_bound_32",
    "fixture_tight_ratio_24",
    "generate",
    "load_graph",
    "load_instance",
    "run_grid",
    "save_graph",
    "save_instance",
    "split_long_path",
    "theoretical_ratio",
    "validate_cover",
]

__version__ = "0.1.0"
