"""Exact defensive-alliance numbers of graphs and their line graphs."""

from .graph import (
    ACYCLIC, INFINITE, Graph, GraphError, GraphFamily, Metrics, ParseError,
    degree_sequence, encode_edge_list, encode_graph6, generate, induced_subgraph,
    metrics, parse_edge_list, parse_graph6,
)
from .kernel import ALL_KINDS, AllianceKind, BoundaryCount, boundary_counts, is_alliance, is_minimal_alliance
from .linegraph import LineGraph, characteristic_set, edge_vertex_degree, line_graph
from .solver import (
    Budget, InfeasibleError, OracleCapError, SolveResult, brute_force_oracle,
    enumerate_connected_subsets, line_alliance_number, min_alliance, minimum_alliances,
)

__version__ = "0.1.0"
