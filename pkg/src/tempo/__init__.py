"""Enumerate efficient paths in weighted temporal graphs.

Two bicriteria objectives are supported: (duration, cost) for min-cost
fastest paths and (arrival, cost) for min-cost earliest-arrival paths.
"""

from tempo.errors import (
    GraphFormatError,
    InstanceTooLargeError,
    PathError,
    TempoError,
    UnknownVertexError,
    ZeroCostEdgeError,
)
from tempo.graph import (
    Objective,
    PathRecord,
    TemporalEdge,
    TemporalGraph,
    parse_edge_stream,
    serialize_edge_stream,
    transform_mcea_to_mcf,
    validate_path,
    validate_walk,
)
from tempo.mcea import enumerate_mcea, enumerate_mcea_via_reduction, iter_mcea
from tempo.mcf import enumerate_mcf, iter_mcf
from tempo.pareto import ParetoFront, ParetoPoint, exists_within, is_efficient, pareto_front, representative_paths

__all__ = [
    "GraphFormatError",
    "InstanceTooLargeError",
    "Objective",
    "ParetoFront",
    "ParetoPoint",
    "PathError",
    "PathRecord",
    "TempoError",
    "TemporalEdge",
    "TemporalGraph",
    "UnknownVertexError",
    "ZeroCostEdgeError",
    "enumerate_mcea",
    "enumerate_mcea_via_reduction",
    "enumerate_mcf",
    "exists_within",
    "is_efficient",
    "iter_mcea",
    "iter_mcf",
    "pareto_front",
    "parse_edge_stream",
    "representative_paths",
    "serialize_edge_stream",
    "transform_mcea_to_mcf",
    "validate_path",
    "validate_walk",
]
