from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings

from linealliance.graph import (
    GraphError, complete_graph, cycle_graph, encode_graph6, is_connected_set, parse_edge_list,
    path_graph, star_graph, to_mask,
)
from linealliance.linegraph import characteristic_set, edge_vertex_degree, line_graph
from linealliance.subsets import connected_subsets_of_size

from conftest import graphs, to_nx


def test_line_of_p3_is_k2():
    lg = line_graph(path_graph(3))
    assert (lg.graph.n, lg.graph.m) == (2, 1)


def test_line_of_claw_is_triangle():
    assert line_graph(star_graph(3)).graph == complete_graph(3)


def test_line_of_k4_is_octahedron():
    lg = line_graph(complete_graph(4))
    assert (lg.graph.n, lg.graph.m) == (6, 12)
    assert set(lg.graph.degrees) == {4}
    assert nx.is_isomorphic(to_nx(lg.graph), nx.octahedral_graph())


def test_edgeless_rejected():
    with pytest.raises(GraphError, match="edgeless"):
        line_graph(parse_edge_list("n 3"))


def test_deterministic_ids():
    lg = line_graph(complete_graph(4))
    assert lg.edge_of == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert lg.vertex_of[(1, 3)] == 4
    assert lg.line_vertex(3, 1) == 4


def test_k2_components_keep_isolated_line_vertices():
    lg = line_graph(parse_edge_list("0 1\n2 3\n3 4"))
    assert lg.graph.n == 3
    assert lg.graph.degrees[0] == 0


@pytest.mark.parametrize("g, u, v, expected", [
    (nx.complete_bipartite_graph(2, 3), 0, 2, 3),
    (nx.complete_graph(2), 0, 1, 0),
    (nx.cycle_graph(5), 0, 1, 2),
])
def test_edge_vertex_degree(g, u, v, expected):
    from conftest import from_nx
    assert edge_vertex_degree(from_nx(g), u, v) == expected


def test_edge_vertex_degree_non_edge():
    with pytest.raises(GraphError):
        edge_vertex_degree(cycle_graph(5), 0, 2)


def test_degree_identity_exhaustive(atlas7):
    for g in atlas7:
        if g.m == 0:
            continue
        lg = line_graph(g)
        assert lg.graph.n == g.m
        assert lg.graph.m == sum(comb(d, 2) for d in g.degrees)
        for i, (u, v) in enumerate(lg.edge_of):
            assert lg.graph.degrees[i] == edge_vertex_degree(g, u, v)


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_matches_networkx_line_graph(g):
    if g.m == 0:
        return
    lg = line_graph(g)
    expected = nx.line_graph(to_nx(g))
    ours = {frozenset((lg.edge_of[a], lg.edge_of[b])) for a, b in lg.graph.edges}
    theirs = {frozenset((tuple(sorted(a)), tuple(sorted(b)))) for a, b in expected.edges}
    assert ours == theirs


@pytest.mark.parametrize("k", range(3, 10))
def test_line_of_cycle_is_cycle_under_labeling(k):
    lg = line_graph(cycle_graph(k))
    assert set(lg.graph.degrees) == {2}
    assert nx.is_connected(to_nx(lg.graph))
    assert encode_graph6(lg.graph) == encode_graph6(lg.graph)


@pytest.mark.parametrize("n", range(1, 8))
def test_line_of_star_is_complete(n):
    assert line_graph(star_graph(n)).graph == complete_graph(n)


def test_characteristic_set_examples():
    claw = line_graph(star_graph(3))
    assert characteristic_set(claw, [claw.line_vertex(0, 1), claw.line_vertex(0, 2)]) == [0, 1, 2]
    p3 = line_graph(path_graph(3))
    assert characteristic_set(p3, [0, 1]) == [0, 1, 2]
    c5 = line_graph(cycle_graph(5))
    assert characteristic_set(c5, [c5.line_vertex(2, 3)]) == [2, 3]


def test_characteristic_set_errors():
    lg = line_graph(cycle_graph(5))
    with pytest.raises(GraphError, match="empty"):
        characteristic_set(lg, [])
    with pytest.raises(GraphError):
        characteristic_set(lg, [5])


def test_connectivity_transfer(atlas7):
    for g in atlas7:
        if g.m == 0 or g.n > 6:
            continue
        lg = line_graph(g)
        for k in range(1, min(lg.graph.n, 4) + 1):
            for s_l in connected_subsets_of_size(lg.graph, k):
                c = characteristic_set(lg, [i for i in range(lg.graph.n) if s_l >> i & 1])
                assert is_connected_set(g, to_mask(c))
                assert len(c) <= k + 1
