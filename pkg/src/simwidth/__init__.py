"""Branch decompositions of bounded sim-width and mim-width, the graph
families around them, and LC-VSVP solving over a decomposition."""

from .chordal import (CliqueCertificate, CliqueTree, check_clique_tree, chordal_branch_decomposition,
                      clique_tree, one_sided_clique_certificate)
from .cocomp import (OrderingSearch, cocomp_linear_decomposition, find_cocomp_ordering,
                     find_cocomp_violation, prefix_cuts, verify_cocomp_ordering)
from .cuts import Cut, CutFunction, MatchingWitness, cut_value, cutrk, evaluate, mimval, simval
from .decomposition import (BranchDecomposition, WidthReport, balanced_cut, caterpillar_from_ordering,
                            contract_decomposition, cuts, f_width, linear_order)
from .errors import (DecompositionError, FormatError, GraphError, InvalidOrderingError, NotChordalError,
                     PreconditionError, SizeLimitError)
from .graph import (ChordalityResult, Graph, chordality_check, contract_edge, delete_vertex, gf2_rank,
                    induced_subgraph, smooth_vertex)
from .oracle import exact_linear_width, exact_width
from .patterns import (PatternWitness, detect_ktkt, detect_ktst, mimw_bound_induced_minor,
                       mimw_bound_induced_subgraph, mimw_lb_degenerate, ramsey_upper_bound)

__all__ = [
    "BranchDecomposition", "ChordalityResult", "CliqueCertificate", "CliqueTree", "Cut", "CutFunction",
    "DecompositionError", "FormatError", "Graph", "GraphError", "InvalidOrderingError", "MatchingWitness",
    "NotChordalError", "OrderingSearch", "PatternWitness", "PreconditionError", "SizeLimitError",
    "WidthReport", "balanced_cut", "caterpillar_from_ordering", "check_clique_tree",
    "chordal_branch_decomposition", "chordality_check", "clique_tree", "cocomp_linear_decomposition",
    "contract_decomposition", "contract_edge", "cut_value", "cutrk", "cuts", "delete_vertex", "detect_ktkt",
    "detect_ktst", "evaluate", "exact_linear_width", "exact_width", "f_width", "find_cocomp_ordering",
    "find_cocomp_violation", "gf2_rank", "induced_subgraph", "linear_order", "mimval",
    "mimw_bound_induced_minor", "mimw_bound_induced_subgraph", "mimw_lb_degenerate",
    "one_sided_clique_certificate", "prefix_cuts", "ramsey_upper_bound", "simval", "smooth_vertex",
    "verify_cocomp_ordering",
]
