"""Exact enumeration of standard paths in the composition poset N."""

from .exact import (
    BigRational,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    partial_fractions,
    ratfn_arith,
    series_compose,
    series_derivative,
    series_mul,
    series_sqrt,
)
from .height2 import P_closed_series, P_k_ratfn, c2_closed_forms, c2_table, verify_pde_height2
from .paths import (
    StandardPath,
    Tableau,
    check_necessary_condition,
    count_by_endpoint,
    count_by_stats,
    enumerate_paths,
    path_to_tableau,
    tableau_to_path,
)
from .poset import Composition, covers_Gamma, covers_N, hasse_graph, leq, to_word
from .unrestricted import egf_slices, gamma_table, total_counts, verify_pde_unrestricted
from .width import L_k_ratfn, a_nk_closed_form, f_k_series, shape_count, verify_fk_structure

__version__ = "0.1.0"
