"""Kneser graphs, exact colouring and homomorphism solvers, and finite
certificates for homomorphism bounds on regular trees."""

from .balls import (
    BallLabeling,
    ball_labeling_graph,
    enumerate_ball_labelings,
    graph_to_ball_hom,
    tree_to_ball_hom,
    truncated_tree,
)
from .certificates import (
    corollary14_arithmetic,
    corollary_witness_search,
    hyperfinite_witness_check,
    reverify_with_mpmath,
)
from .errors import (
    BadParams,
    BudgetExhausted,
    CapExceeded,
    CertificateInvalid,
    DegreeTooHigh,
    Infeasible,
    KneserHomError,
    NoHomomorphism,
    NotFound,
    NotReduced,
    PaletteTooSmall,
    ResourceLimit,
    ShortOddCycle,
    SizeLimit,
)
from .estimators import (
    BallLabelingHom,
    ExactColoring,
    FractionalColoring,
    GreedyColoring,
    KFoldColoring,
    check_graph,
)
from .g0 import DenseFamily, FlipEdge, build_dense_family, flip_map, g0_edges_at_depth
from .graph import (
    Coloring,
    Graph,
    complete_graph,
    cycle_graph,
    girth,
    greedy_coloring,
    independence_number,
    maximal_independent_set,
    maximum_independent_set,
    odd_girth,
    path_graph,
    power_graph,
    validate_homomorphism,
)
from .hom import (
    FoldColoring,
    chromatic_number,
    check_fractional_bound,
    enumerate_maximal_independent_sets,
    find_homomorphism,
    fractional_chromatic_lp,
    optimal_coloring,
)
from .kfold import cycle_to_odd_cycle_hom, kfold_color_pipeline
from .kneser import (
    KSubset,
    canonical_kneser_coloring,
    kneser_chromatic_formula,
    kneser_graph,
    kneser_odd_girth_formula,
    rank_subset,
    schrijver_graph,
    schrijver_vertex_count,
    unrank_subset,
)
from .repro import run_reproduction_suite
from .simplex import solve_covering_lp
from .words import cayley_ball, reduce, sigma_circuit, sigma_word, sphere

__version__ = "0.1.0"

__all__ = [
    "BadParams",
    "BallLabeling",
    "BallLabelingHom",
    "BudgetExhausted",
    "CapExceeded",
    "CertificateInvalid",
    "Coloring",
    "DegreeTooHigh",
    "DenseFamily",
    "ExactColoring",
    "FlipEdge",
    "FoldColoring",
    "FractionalColoring",
    "Graph",
    "GreedyColoring",
    "Infeasible",
    "KFoldColoring",
    "KSubset",
    "KneserHomError",
    "NoHomomorphism",
    "NotFound",
    "NotReduced",
    "PaletteTooSmall",
    "ResourceLimit",
    "ShortOddCycle",
    "SizeLimit",
    "ball_labeling_graph",
    "build_dense_family",
    "canonical_kneser_coloring",
    "cayley_ball",
    "check_fractional_bound",
    "check_graph",
    "chromatic_number",
    "complete_graph",
    "corollary14_arithmetic",
    "corollary_witness_search",
    "cycle_graph",
    "cycle_to_odd_cycle_hom",
    "enumerate_ball_labelings",
    "enumerate_maximal_independent_sets",
    "find_homomorphism",
    "flip_map",
    "fractional_chromatic_lp",
    "g0_edges_at_depth",
    "girth",
    "graph_to_ball_hom",
    "greedy_coloring",
    "hyperfinite_witness_check",
    "independence_number",
    "kfold_color_pipeline",
    "kneser_chromatic_formula",
    "kneser_graph",
    "kneser_odd_girth_formula",
    "maximal_independent_set",
    "maximum_independent_set",
    "odd_girth",
    "optimal_coloring",
    "path_graph",
    "power_graph",
    "rank_subset",
    "reduce",
    "reverify_with_mpmath",
    "run_reproduction_suite",
    "schrijver_graph",
    "schrijver_vertex_count",
    "sigma_circuit",
    "sigma_word",
    "solve_covering_lp",
    "sphere",
    "tree_to_ball_hom",
    "truncated_tree",
    "unrank_subset",
    "validate_homomorphism",
]
