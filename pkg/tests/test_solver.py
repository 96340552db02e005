from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from linealliance.graph import (
    GraphFamily, complete_graph, cycle_graph, generate, is_connected_set, parse_edge_list,
    path_graph, to_mask,
)
from linealliance.kernel import ALL_KINDS, AllianceKind, is_alliance
from linealliance.solver import (
    Budget, InfeasibleError, OracleCapError, brute_force_oracle, enumerate_connected_subsets,
    line_alliance_number, min_alliance, minimum_alliances,
)

from conftest import graphs, to_nx

K = AllianceKind


@pytest.mark.parametrize("g, kind, value, witness", [
    (path_graph(4), K.DEFENSIVE, 1, (0,)),
    (cycle_graph(5), K.GLOBAL_DEFENSIVE, 3, (0, 1, 2)),
    (complete_graph(5), K.DEFENSIVE, 3, (0, 1, 2)),
    (cycle_graph(6), K.STRONG, 2, (0, 1)),
    (complete_graph(4), K.STRONG, 3, (0, 1, 2)),
    (complete_graph(2), K.DEFENSIVE, 1, (0,)),
])
def test_min_alliance_examples(g, kind, value, witness):
    for res in (min_alliance(g, kind), brute_force_oracle(g, kind)):
        assert res.value == value
        assert res.witness == witness
        assert res.certified and res.status == "optimal"


@pytest.mark.parametrize("g, k, count", [
    (cycle_graph(4), 2, 8),
    (complete_graph(3), 3, 7),
    (path_graph(3), 2, 5),
])
def test_enumerate_connected_subsets_counts(g, k, count):
    subsets = list(enumerate_connected_subsets(g, k))
    assert len(subsets) == count
    assert len(set(subsets)) == count


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_enumerate_connected_subsets_matches_brute_force(g):
    k = min(g.n, 5)
    expected = {
        s for size in range(1, k + 1) for s in combinations(range(g.n), size)
        if is_connected_set(g, to_mask(s))
    }
    got = list(enumerate_connected_subsets(g, k))
    assert len(got) == len(expected)
    assert set(got) == expected


@pytest.mark.parametrize("k", range(3, 9))
def test_line_of_cycle(k):
    res = line_alliance_number(cycle_graph(k), K.DEFENSIVE)
    assert res.value == 2
    assert res.witness_edges is not None and len(res.witness_edges) == 2


def test_line_of_k4():
    assert line_alliance_number(complete_graph(4), K.DEFENSIVE).value == 3


def test_line_of_k23():
    g = generate(GraphFamily("complete-bipartite", (2, 3)))
    assert line_alliance_number(g, K.DEFENSIVE).value == 2
    assert line_alliance_number(g, K.STRONG).value == 3
    assert line_alliance_number(g, K.STRONG, oracle=True).value == 3


def test_witness_edges_are_base_edges():
    g = generate(GraphFamily("petersen"))
    res = line_alliance_number(g, K.STRONG)
    assert res.value == 3
    assert all(g.has_edge(u, v) for u, v in res.witness_edges)


def test_budget_exhaustion_is_partial():
    g = generate(GraphFamily("petersen"))
    res = min_alliance(g, K.GLOBAL_CONNECTED_STRONG, Budget(max_nodes=5))
    assert not res.certified
    assert res.status == "lower-bound-only"
    assert res.value is None
    assert res.lower_bound is not None and res.lower_bound >= 1
    full = min_alliance(g, K.GLOBAL_CONNECTED_STRONG)
    assert res.lower_bound <= full.value


def test_budget_exhaustion_local():
    res = min_alliance(generate(GraphFamily("hypercube", (5,))), K.DEFENSIVE, Budget(max_nodes=3))
    assert not res.certified
    assert res.to_json()["status"] == "lower-bound-only"


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("ALLIANCE_BUDGET_NODES", "17")
    assert Budget.from_env().max_nodes == 17
    assert Budget.from_env(3).max_nodes == 3


def test_connected_kinds_infeasible_on_disconnected():
    g = parse_edge_list("0 1\n2 3")
    for kind in (K.GLOBAL_CONNECTED_DEFENSIVE, K.GLOBAL_CONNECTED_STRONG):
        with pytest.raises(InfeasibleError):
            min_alliance(g, kind)
        with pytest.raises(InfeasibleError):
            brute_force_oracle(g, kind)


def test_oracle_cap():
    with pytest.raises(OracleCapError):
        brute_force_oracle(complete_graph(17), K.DEFENSIVE)


def test_isolated_vertex():
    g = parse_edge_list("n 3\n0 1")
    assert min_alliance(g, K.DEFENSIVE).witness == (0,)
    assert min_alliance(g, K.GLOBAL_DEFENSIVE).value == 2


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9))
def test_solver_matches_oracle(g):
    connected = nx.is_connected(to_nx(g))
    for kind in ALL_KINDS:
        if kind.connected and not connected:
            continue
        res = min_alliance(g, kind)
        ref = brute_force_oracle(g, kind)
        assert (res.value, res.witness) == (ref.value, ref.witness)
        assert is_alliance(g, res.witness, kind)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_minimum_alliances_complete_and_connected(g):
    for kind in (K.DEFENSIVE, K.STRONG):
        mins = minimum_alliances(g, kind)
        value = brute_force_oracle(g, kind).value
        expected = [
            s for s in combinations(range(g.n), value) if is_alliance(g, s, kind)
        ]
        assert set(mins) <= set(expected)
        # minimum alliances are connected, so the enumeration misses none
        assert set(mins) == {s for s in expected if is_connected_set(g, to_mask(s))} == set(expected)
        assert mins == sorted(mins)


def test_determinism():
    g = generate(GraphFamily("hypercube", (3,)))
    for kind in ALL_KINDS:
        a, b = min_alliance(g, kind), min_alliance(g, kind)
        assert a.to_json() == b.to_json()
