"""Exact computation and extremal analysis of the augmented eccentric
connectivity index on simple connected graphs and trees."""

from .graphs import (
    AugeccError,
    EccProfile,
    ExactRational,
    Graph,
    IndexKind,
    InvalidGraphError,
    Matching,
    PreconditionError,
    build_graph,
    diametric_path_farthest_branch,
    eccentricities,
    index_value,
    is_path_graph,
    is_tree,
    neighbor_degree_product,
    tree_perfect_matching,
)
from .families import (
    BalanceClass,
    FamilyKind,
    balance_class,
    balanced_tree,
    closed_form_value,
    complete_graph,
    harmonic,
    make_family,
    max_tree_central_degree,
    path_graph,
    star_graph,
)
from .enumeration import (
    canonical_code,
    connected_labeled_graphs,
    free_trees,
    pm_trees,
    prufer_decode,
    random_tree,
)
from .transforms import (
    Direction,
    TransformRule,
    TreeTrace,
    apply_balance,
    apply_deg_reduce_path,
    apply_p3_rebalance,
    apply_path_min,
    apply_pm_shift,
    apply_star_max,
    apply_rule,
    reduce_tree,
)
from .extremal import (
    Claim,
    ClaimVerdict,
    ExtremalReport,
    GraphClass,
    crossover_table,
    p2_profile,
    scan,
    super_augmented_survey,
    verify_claims,
)
from .graphio import (
    format_edgelist,
    format_graph6,
    parse_edgelist,
    parse_graph,
    parse_graph6,
)

__version__ = "0.1.0"
