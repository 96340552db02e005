import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from linealliance.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph.from_edges(n, chosen)
    if connected:
        # chain components together deterministically
        h = to_nx(g)
        comps = sorted(min(c) for c in nx.connected_components(h))
        extra = list(zip(comps, comps[1:]))
        g = Graph.from_edges(n, list(g.edges) + [e for e in extra if not h.has_edge(*e)])
    return g


@pytest.fixture(scope="session")
def atlas7():
    """Every graph (connected or not) with 1..7 vertices, as Graph objects."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
