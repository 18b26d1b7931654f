"""Hamiltonian paths and cycles in {claw, net}-free graphs."""
from .errors import (
    Disconnected,
    HamnetError,
    InternalError,
    NotAChain,
    NotClawNetFree,
    PreconditionViolation,
)
from .graph_core import (
    Cycle,
    Edge,
    Graph,
    GraphFormatError,
    Path,
    connected_components,
    format_graph,
    induced,
    is_connected,
    parse_graph,
    read_graph,
    validate_path,
)
from .hamiltonian import (
    Diagnosis,
    EWitness,
    LWitness,
    chain_trace_via_edges,
    find_trace,
    in_obstruction_E,
    in_obstruction_L_literal,
    s_trace_via_edge,
    split_trace_for_E,
    st_trace_cut1,
    st_trace_via_edge,
    trace,
    trace_via_edge,
    trace_via_edge_2conn,
    track,
    track_via_edge,
)
from .key_lemma import extend_trace
from .structure import (
    BlockDecomposition,
    ForbiddenCertificate,
    block_chain,
    blocks,
    find_claw,
    find_net,
    is_claw_net_free,
    vertex_connectivity_at_least,
)

__version__ = "0.1.0"

__all__ = [
    "Disconnected",
    "HamnetError",
    "InternalError",
    "NotAChain",
    "NotClawNetFree",
    "PreconditionViolation",
    "Cycle",
    "Edge",
    "Graph",
    "GraphFormatError",
    "Path",
    "connected_components",
    "format_graph",
    "induced",
    "is_connected",
    "parse_graph",
    "read_graph",
    "validate_path",
    "Diagnosis",
    "EWitness",
    "LWitness",
    "chain_trace_via_edges",
    "find_trace",
    "in_obstruction_E",
    "in_obstruction_L_literal",
    "s_trace_via_edge",
    "split_trace_for_E",
    "st_trace_cut1",
    "st_trace_via_edge",
    "trace",
    "trace_via_edge",
    "trace_via_edge_2conn",
    "track",
    "track_via_edge",
    "BlockDecomposition",
    "ForbiddenCertificate",
    "block_chain",
    "blocks",
    "find_claw",
    "find_net",
    "is_claw_net_free",
    "vertex_connectivity_at_least",
    "extend_trace",
]
