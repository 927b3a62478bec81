"""Exact immanants of totally nonnegative matrices and the hook-character chain."""

from .characters import (
    SymmetricFunction,
    TraceVector,
    character_table,
    frobenius,
    hook_character,
    inverse_frobenius,
    irreducible_character,
    named_trace,
    parse_trace,
    theta_level,
    to_basis,
)
from .chromatic import Graph, chromatic_symmetric_function, trace_of_graph
from .errors import ClosureAddedWarning, InvalidArgument, NotFactorable, ResourceLimit
from .immanants import (
    determinant,
    hook_chain,
    immanant,
    is_totally_nonnegative,
    normalized_immanant,
    permanent,
)
from .networks import PlanarNetwork, factor_to_network, path_matrix, random_tnn_network
from .partitions import Partition, kostka, partitions_of
from .posets import Poset, algorithm_P_to_C, antiadjacency, incomparability_graph

__version__ = "0.1.0"

__all__ = [
    "ClosureAddedWarning",
    "Graph",
    "InvalidArgument",
    "NotFactorable",
    "Partition",
    "PlanarNetwork",
    "Poset",
    "ResourceLimit",
    "SymmetricFunction",
    "TraceVector",
    "algorithm_P_to_C",
    "antiadjacency",
    "character_table",
    "chromatic_symmetric_function",
    "determinant",
    "factor_to_network",
    "frobenius",
    "hook_chain",
    "hook_character",
    "immanant",
    "incomparability_graph",
    "inverse_frobenius",
    "irreducible_character",
    "is_totally_nonnegative",
    "kostka",
    "named_trace",
    "normalized_immanant",
    "parse_trace",
    "partitions_of",
    "path_matrix",
    "permanent",
    "random_tnn_network",
    "theta_level",
    "to_basis",
    "trace_of_graph",
]
