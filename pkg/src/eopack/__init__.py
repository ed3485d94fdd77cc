"""Edge open packing toolkit.

An edge open packing of a graph is a set of edges no two of which are
joined by a common edge, i.e. no edge of the graph has an endpoint in one
and an endpoint in the other.  The package computes the largest such set
exactly (branch and bound on the conflict graph), in linear time on trees,
builds the hardness-reduction gadgets that tie the problem to maximum
independent set, and checks the degree bound, its tightness
characterization, and the edge-removal bounds.
"""

from ._kernels import JIT_ENABLED, backend_name, get_kernels
from .bounds import (DeltaBoundReport, FamilyFWitness, InfeasiblePatternError,
                     RemovalEntry, RemovalProfile, SmallRhoReport,
                     build_family_f, build_removal_realization,
                     check_char_theorem, check_rho_small_characterizations,
                     delta_bound_check, edge_removal_profile,
                     recognize_family_f)
from .exact import (BudgetExceededError, SolveResult, eop_number_brute,
                    eop_number_exact, independence_number_brute,
                    induced_matching_number, is_induced_matching,
                    max_independent_set)
from .gadgets import (EULERIAN, KINDS, PLANAR, UNIVERSAL, GadgetOutput,
                      NotIndependentError, ReductionReport,
                      build_eulerian_gadget, build_eulerian_witness,
                      build_planar_gadget, build_planar_witness,
                      build_universal_gadget, build_universal_witness,
                      verify_reduction)
from .generators import (all_graphs, all_trees, complete_bipartite_graph,
                         complete_graph, complete_graph_minus_edge,
                         connected_graphs, cycle_graph, decode_prufer,
                         empty_graph, path_graph, petersen_graph,
                         random_graph, random_tree, star_graph)
from .graph import (Edge, EopSet, Graph, GraphError, common_edge,
                    conflict_graph, connected_components, diameter,
                    disjoint_union, induced_subgraph_by_edges, is_claw_free,
                    is_complete, is_eop_set, is_star_forest,
                    structural_predicates, without_edge)
from .io import ParseError, parse_graph, parse_pairs, write_graph, write_pairs
from .tree import (DpTable, NotATreeError, RootedTree, SweepResult, dp_pass,
                   root_tree, sweep_prufer_trees, tree_eop_number,
                   tree_eop_set)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph core
    "Graph", "Edge", "EopSet", "GraphError", "common_edge", "is_eop_set",
    "conflict_graph", "induced_subgraph_by_edges", "connected_components",
    "is_star_forest", "is_claw_free", "is_complete", "diameter",
    "structural_predicates", "disjoint_union", "without_edge",
    # exact solver
    "SolveResult", "BudgetExceededError", "eop_number_exact",
    "max_independent_set", "eop_number_brute", "independence_number_brute",
    "is_induced_matching", "induced_matching_number",
    # tree solver
    "NotATreeError", "RootedTree", "DpTable", "root_tree", "dp_pass",
    "tree_eop_number", "tree_eop_set", "sweep_prufer_trees", "SweepResult",
    # gadgets
    "UNIVERSAL", "EULERIAN", "PLANAR", "KINDS", "GadgetOutput",
    "NotIndependentError", "ReductionReport", "build_universal_gadget",
    "build_universal_witness", "build_eulerian_gadget",
    "build_eulerian_witness", "build_planar_gadget", "build_planar_witness",
    "verify_reduction",
    # bounds
    "DeltaBoundReport", "FamilyFWitness", "InfeasiblePatternError",
    "RemovalEntry", "RemovalProfile", "SmallRhoReport", "delta_bound_check",
    "recognize_family_f", "check_char_theorem", "build_family_f",
    "edge_removal_profile", "build_removal_realization",
    "check_rho_small_characterizations",
    # generators
    "empty_graph", "path_graph", "cycle_graph", "complete_graph",
    "complete_graph_minus_edge", "star_graph", "complete_bipartite_graph",
    "petersen_graph", "random_graph", "random_tree", "decode_prufer",
    "all_trees", "all_graphs", "connected_graphs",
    # io
    "ParseError", "parse_graph", "write_graph", "parse_pairs", "write_pairs",
    # kernels
    "JIT_ENABLED", "backend_name", "get_kernels",
]
