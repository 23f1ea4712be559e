"""Irreversible majority dynamos on directed and undirected graphs.

Thin Python surface over the C++ core: the coloring closure, the partition
and cut refinement algorithms with their size guarantees, the dominating-set
gadget reduction and the exact brute-force oracles.
"""

from ._core import (
    Activation,
    CertificateError,
    ColoringResult,
    Diagnostics,
    DirectedDynamoResult,
    GadgetCheckReport,
    GadgetMap,
    Graph,
    OracleResult,
    ParseError,
    Partition,
    PreconditionError,
    ThresholdScenario,
    UndirectedDynamoResult,
    bfs_distances,
    blocking_set,
    build_gadget,
    check_gadget_invariants,
    closure,
    domset_to_dynamo,
    dynamo_to_domset,
    eta,
    find_dynamo_directed,
    find_dynamo_undirected,
    generate,
    greedy_domset,
    induced_components,
    initial_partition,
    is_dominating,
    is_dynamo,
    make_graph,
    min_domset_bruteforce,
    min_dynamo_bruteforce,
    parse_gadget_map,
    parse_graph,
    parse_vertex_set,
    refine_step,
    serialize_gadget_map,
    serialize_graph,
    serialize_vertex_set,
    validate,
)

__all__ = [
    "Activation",
    "CertificateError",
    "ColoringResult",
    "Diagnostics",
    "DirectedDynamoResult",
    "GadgetCheckReport",
    "GadgetMap",
    "Graph",
    "OracleResult",
    "ParseError",
    "Partition",
    "PreconditionError",
    "ThresholdScenario",
    "UndirectedDynamoResult",
    "bfs_distances",
    "blocking_set",
    "build_gadget",
    "check_gadget_invariants",
    "closure",
    "domset_to_dynamo",
    "dynamo_to_domset",
    "eta",
    "find_dynamo_directed",
    "find_dynamo_undirected",
    "generate",
    "greedy_domset",
    "induced_components",
    "initial_partition",
    "is_dominating",
    "is_dynamo",
    "make_graph",
    "min_domset_bruteforce",
    "min_dynamo_bruteforce",
    "parse_gadget_map",
    "parse_graph",
    "parse_vertex_set",
    "refine_step",
    "serialize_gadget_map",
    "serialize_graph",
    "serialize_vertex_set",
    "validate",
]
