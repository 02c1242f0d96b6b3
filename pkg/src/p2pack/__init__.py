"""Exact parameterized solver for vertex-disjoint P2-packing.

Public surface: the graph/packing value types, instance I/O and
generators, the solver drivers, and the brute-force oracle lab used to
cross-check them.
"""

from .augment import AugmentBudget, augment, binomial_growth_check
from .crowns import (CrownDecomposition, LiftRecord, apply_crown,
                     detect_crown_opportunity, find_double_crown,
                     find_fat_crown, lift_solution, lift_through_chain)
from .errors import ContractViolation, InputError, ParseError, SizeCapExceeded
from .graph import (Graph, P2Path, Packing, components_outside,
                    ensure_valid_packing, neighbors_of_set)
from .instances import (Instance, SolveResult, SolveStats, gen_gnp,
                        gen_planted, parse_dimacs, to_dimacs, write_result)
from .matching import BipartiteGraph, Matching, alternating_reachable, max_matching
from .oracle import (enumerate_packings, extremal_family, max_packing_dp,
                     min_total_edge_cover_bruteforce, verify_extremal_properties)
from .reconstruct import packing_from_endpoint_pairs, packing_from_midpoints
from .reduce import (LeftoverClassification, apply_rule1, apply_rule2,
                     check_properties, classify_leftover, greedy_maximal,
                     reduce_exhaustive)
from .solver import KernelResult, kernelize, solve, solve_total_edge_cover

__version__ = "0.1.0"

__all__ = [
    "AugmentBudget", "augment", "binomial_growth_check",
    "CrownDecomposition", "LiftRecord", "apply_crown",
    "detect_crown_opportunity", "find_double_crown", "find_fat_crown",
    "lift_solution", "lift_through_chain",
    "ContractViolation", "InputError", "ParseError", "SizeCapExceeded",
    "Graph", "P2Path", "Packing", "components_outside",
    "ensure_valid_packing", "neighbors_of_set",
    "Instance", "SolveResult", "SolveStats", "gen_gnp", "gen_planted",
    "parse_dimacs", "to_dimacs", "write_result",
    "BipartiteGraph", "Matching", "alternating_reachable", "max_matching",
    "enumerate_packings", "extremal_family", "max_packing_dp",
    "min_total_edge_cover_bruteforce", "verify_extremal_properties",
    "packing_from_endpoint_pairs", "packing_from_midpoints",
    "LeftoverClassification", "apply_rule1", "apply_rule2",
    "check_properties", "classify_leftover", "greedy_maximal",
    "reduce_exhaustive",
    "KernelResult", "kernelize", "solve", "solve_total_edge_cover",
    "__version__",
]
