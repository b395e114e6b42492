"""Exact packing chromatic numbers, Mycielskians and realizable triples."""

from .budget import Budget, BudgetExceeded
from .families import FamilyParams, generate
from .graph import UNREACHABLE, DistanceMatrix, Graph, append_leaves, distances
from .graph6 import emit_graph6, parse_graph6
from .invariants import chromatic_number, clique_number, independence_number, invariant_report, is_k_critical
from .isomorphism import is_isomorphic
from .mycielski import alpha_mycielskian, mycielski_bound_report, mycielski_power, mycielski_power_bound, mycielskian
from .packing import (
    PackingColoring,
    SPackingSpec,
    bound_delta_alpha_lower,
    bound_indep_upper,
    h_class_equality_check,
    is_i_packing,
    packing_chromatic_number,
    s_packing_color,
)
from .realizability import MTable, Triple, build_m_table, check_theorems, realize_higher, search_counterexample, triple_of
from .results import Status, TheoremCheckResult

__version__ = "0.1.0"
