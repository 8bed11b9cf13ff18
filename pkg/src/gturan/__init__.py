"""Exact extremal subgraph-density computations for graphs of bounded
degree and clique number: constructions, bit-parallel counting, rational
density bounds, a localized weight inequality, and brute-force extremal
oracles at desk scale."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    canonical_code,
    common_neighborhood,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    isomorphic,
    join,
    path_graph,
)
from .families import (
    ParamTriple,
    TuranSpec,
    colex_turan,
    complete_split,
    join_with_clique,
    lower_bound_family,
    lower_bound_graph,
    turan,
)
from .counting import (
    PatternSpec,
    automorphism_count,
    clique_number,
    copies_through,
    count_cliques,
    count_copies_rooted,
    count_subgraph_copies,
    delete_dominating,
    dominating_vertices,
    enumerate_cliques,
    pattern_spec,
    turan_clique_count,
)
from .freeness import ConstraintSet, FreenessReport, check_constraints, contains_subgraph
from .bounds import (
    BoundsReport,
    bounds_report,
    copy_density,
    empirical_turan_goodness,
    ratio_diagnostic,
    turan_threshold_bound,
)
from .localization import (
    CopyWeights,
    HypothesisViolationError,
    LocalReport,
    clique_weights,
    copy_weights,
    localized_clique_sum,
    localized_report,
)
from .search import (
    SearchOutcome,
    best_composition,
    brute_extremal,
    brute_extremal_u,
    enumerate_graphs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
