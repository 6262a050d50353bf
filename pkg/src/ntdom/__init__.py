"""Exact neighborhood total domination: solvers, tree enumeration and the extremal tree family."""
from .edgelist import EdgeListError, parse_edge_list, serialize_edge_list
from .enumerate import enumerate_trees, prufer_oracle_count
from .extremal import is_subdivided_star, spanning_trees
from .family import (
    P2_UNIT,
    STAR_UNIT,
    TCertificate,
    TSpec,
    UnitKind,
    build_member,
    certificate_ntd_set,
    recognize_T,
    validate_certificate,
)
from .graph import (
    Graph,
    canonical_tree_code,
    closed_neighborhood,
    distances_from,
    has_isolated_vertex,
    induced_subgraph,
    is_2_packing,
    is_connected,
    is_tree,
    leaves_and_supports,
    members,
    open_neighborhood,
    vset,
)
from .harness import Theorem, VerificationReport, verify
from .named import b_graphs, c5, example_member
from .solvers import (
    Method,
    ParamKind,
    SolveResult,
    check_chain,
    check_half_bound,
    is_dominating_set,
    is_ntd_set,
    is_total_dominating_set,
    solve_exact,
)
from .treedp import ntd_number_tree_dp

__version__ = "0.1.0"
