"""Graphs as bipartite quantum states.

A connected graph determines a pure state on the product of its vertex
space with a doubled edge (arc) space; tracing out the arcs yields the
normalized-Laplacian density matrix. This package builds those objects,
computes Von Neumann / order-p entropies, and exhaustively verifies the
closed forms and extremal bounds over all small connected graphs.
"""

from .bounds import (
    BoundCheck,
    ScanResult,
    lower_bound_checks,
    maximality_checks,
    neighbor_sum_checks,
    scan,
    star_cycle_comparison,
    structural_checks,
)
from .entropy import (
    bipartite_renyi2,
    bipartite_vn,
    closed_form,
    complete_vn,
    majorizes,
    regular_renyi2,
    renyi,
    structural,
    von_neumann,
)
from .graph import (
    DisconnectedGraphError,
    EdgeListError,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    enumerate_connected,
    from_edge_list,
    is_connected,
    star,
    to_edge_list,
)
from .laplacian import (
    IsolatedVertexError,
    combinatorial,
    doubled_incidence,
    incidence,
    positive,
    positive_symmetric,
    symmetric,
)
from .linalg import jacobi_eigen, partial_trace
from .qstate import PureState, psi, rho_E, rho_V, verify_purification

__version__ = "0.1.0"
