"""Leafage and vertex leafage of chordal graphs.

Compute the minimum host-tree leaf count (leafage) and the minimum worst
per-vertex subtree leaf count (vertex leafage) over all tree models of a
chordal graph, with certificates, an exact brute-force oracle for small
instances, and a NAE-SAT reduction gadget.
"""

from .cliquetrees import (
    BranchingSets,
    CliqueTree,
    LeafReport,
    TreeModel,
    branching_sets,
    build_clique_tree,
    contract_to_minimal,
    is_tree_model,
    leaf_report,
    model_from_clique_tree,
    path_containment_violation,
    verify_clique_tree,
)
from .gadget import (
    GadgetGraph,
    NaeInstance,
    build_gadget,
    is_solution,
    normalize_star,
    parse_clause_file,
    satisfies_star,
    solution_to_tree,
    solve_brute_force,
    tree_to_solution,
    verify_reduction,
)
from .graphs import (
    CliqueGraph,
    Graph,
    GraphFormatError,
    PerfectEliminationOrder,
    check_chordal,
    chordal_cliques,
    clique_graph,
    format_edge_list,
    is_valid_peo,
    maximal_cliques,
    parse_graph,
)
from .oracle import (
    OracleLimitError,
    OracleResult,
    enumerate_clique_trees,
    oracle_optima,
    random_chordal,
)
from .tokens import (
    AugmentingPath,
    TokenAssignment,
    TokenMove,
    apply_move,
    apply_path,
    find_realizing_tree,
    is_realizable,
    minimize_leafage,
    minimize_leafage_with_trace,
    shortest_augmenting_path,
    tokens_from_tree,
)
from .vertex_leafage import (
    NoFeasibleBranchingError,
    VlCertificate,
    clique_tree_with_branching,
    simultaneous_optimum,
    vertex_leafage_bounded,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentingPath",
    "BranchingSets",
    "CliqueGraph",
    "CliqueTree",
    "GadgetGraph",
    "Graph",
    "GraphFormatError",
    "LeafReport",
    "NaeInstance",
    "NoFeasibleBranchingError",
    "OracleLimitError",
    "OracleResult",
    "PerfectEliminationOrder",
    "TokenAssignment",
    "TokenMove",
    "TreeModel",
    "VlCertificate",
    "apply_move",
    "apply_path",
    "branching_sets",
    "build_clique_tree",
    "build_gadget",
    "check_chordal",
    "chordal_cliques",
    "clique_graph",
    "clique_tree_with_branching",
    "contract_to_minimal",
    "enumerate_clique_trees",
    "find_realizing_tree",
    "format_edge_list",
    "is_realizable",
    "is_solution",
    "is_tree_model",
    "is_valid_peo",
    "leaf_report",
    "maximal_cliques",
    "minimize_leafage",
    "minimize_leafage_with_trace",
    "model_from_clique_tree",
    "normalize_star",
    "oracle_optima",
    "parse_clause_file",
    "parse_graph",
    "path_containment_violation",
    "random_chordal",
    "satisfies_star",
    "shortest_augmenting_path",
    "simultaneous_optimum",
    "solution_to_tree",
    "solve_brute_force",
    "tokens_from_tree",
    "tree_to_solution",
    "verify_clique_tree",
    "verify_reduction",
    "vertex_leafage_bounded",
]
