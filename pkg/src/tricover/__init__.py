"""Exact solvers, extremal constructions, and a verification harness for
triangle edge covers, triangle-independent edge sets, and the subset
functional phi_k.
"""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    ParameterError,
    PreconditionError,
    Graph6ParseError,
    edge_index,
    edge_at,
    gnp,
    complete_graph,
    empty_graph,
    complete_bipartite,
    cycle_graph,
    path_graph,
    disjoint_union,
    join,
    standard_graph,
    triangles,
    triangle_count,
    is_triangular,
    to_graph6,
    from_graph6,
    read_graph6,
    write_graph6,
)
from .solvers import (
    TAU,
    ALPHA1,
    ALPHA,
    PHI,
    OPTIMAL,
    BOUNDED,
    Budget,
    UNLIMITED,
    SolveOutcome,
    OracleOverflowError,
    CertificateError,
    tau_exact,
    alpha1_exact,
    alpha_exact,
    phi_max,
    tau_join_formula,
    oracle_bruteforce,
    edge_conflict_graph,
    greedy_triangle_cover,
    check_certificate,
)
