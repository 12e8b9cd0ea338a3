"""Partial degree bounded edge packing: solvers, reductions and audits."""

from ._core import (
    CapExceededError,
    Graph,
    InvalidInputError,
    ParseError,
    approx_p1b,
    approx_p2b_derandomized,
    approx_p2b_randomized,
    audit_claims,
    closure,
    expected_left_degree,
    find_formula,
    force_priority_edges,
    generate,
    graph_text,
    graph_to_strings,
    greedy_min_dominating,
    is_dominating_set,
    is_expressible,
    is_expressible_2regular,
    is_expressible_independent,
    is_partial_c_bounded,
    is_star_forest,
    min_dominating_bruteforce,
    p1b_to_pcb_gadget,
    parse_graph,
    pcb_upper_bounds,
    priority_edges,
    solve_brute,
    solve_meis,
    solve_tree,
    strings_to_graph,
)

__all__ = [
    "CapExceededError",
    "Graph",
    "InvalidInputError",
    "ParseError",
    "approx_p1b",
    "approx_p2b_derandomized",
    "approx_p2b_randomized",
    "audit_claims",
    "closure",
    "expected_left_degree",
    "find_formula",
    "force_priority_edges",
    "generate",
    "graph_text",
    "graph_to_strings",
    "greedy_min_dominating",
    "is_dominating_set",
    "is_expressible",
    "is_expressible_2regular",
    "is_expressible_independent",
    "is_partial_c_bounded",
    "is_star_forest",
    "min_dominating_bruteforce",
    "p1b_to_pcb_gadget",
    "parse_graph",
    "pcb_upper_bounds",
    "priority_edges",
    "solve_brute",
    "solve_meis",
    "solve_tree",
    "strings_to_graph",
]
