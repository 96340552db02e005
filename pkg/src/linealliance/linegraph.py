"""Line graphs with provenance back to the edges of the base graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bits, to_mask


@dataclass(frozen=True)
class LineGraph:
    """``L(base)`` plus the bidirectional edge <-> line-vertex mapping.

    Line-vertex ``i`` is ``base.edges[i]``, so ids follow the lexicographic
    order of ``(min endpoint, max endpoint)``.
    """

    base: Graph
    graph: Graph
    edge_of: tuple[tuple[int, int], ...]
    vertex_of: dict[tuple[int, int], int]

    def line_vertex(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        try:
            return self.vertex_of[key]
        except KeyError:
            raise GraphError(f"{{{u}, {v}}} is not an edge of the base graph") from None

    def edges_for(self, line_vertices: Iterable[int]) -> list[tuple[int, int]]:
        return [self.edge_of[e] for e in sorted(line_vertices)]


def line_graph(g: Graph) -> LineGraph:
    if g.m == 0:
        raise GraphError("line graph of edgeless graph is empty")
    edges = g.edges
    vertex_of = {e: i for i, e in enumerate(edges)}
    # line-vertices incident to each base vertex
    incident = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return LineGraph(base=g, graph=Graph(len(edges), adj), edge_of=edges, vertex_of=vertex_of)


def edge_vertex_degree(g: Graph, u: int, v: int) -> int:
    """Degree of the line-vertex ``{u, v}``: ``δ(u) + δ(v) - 2``."""
    if not g.has_edge(u, v):
        raise GraphError(f"{{{u}, {v}}} is not an edge")
    return g.degrees[u] + g.degrees[v] - 2


def characteristic_set(lg: LineGraph, line_vertices: Iterable[int]) -> list[int]:
    """Base-graph vertices covered by the selected edges, sorted."""
    chosen = list(line_vertices)
    if not chosen:
        raise GraphError("characteristic set of the empty set is not defined")
    mask = 0
    for e in chosen:
        if not (isinstance(e, int) and 0 <= e < lg.graph.n):
            raise GraphError(f"line-vertex {e!r} not in 0..{lg.graph.n - 1}")
        u, v = lg.edge_of[e]
        mask |= (1 << u) | (1 << v)
    return list(bits(mask))


def characteristic_mask(lg: LineGraph, line_mask: int) -> int:
    return to_mask(characteristic_set(lg, bits(line_mask)))
