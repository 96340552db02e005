from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linealliance.graph import GraphError, complete_graph, cycle_graph, is_connected_set
from linealliance.kernel import (
    ALL_KINDS, AllianceKind, alliance_table, boundary_counts, is_alliance, is_minimal_alliance,
)

from conftest import graphs

K = AllianceKind


def test_boundary_counts_examples():
    bc = boundary_counts(cycle_graph(5), {0, 1}, 0)
    assert (bc.inside, bc.outside) == (1, 1)
    bc = boundary_counts(complete_graph(4), {0, 1, 2}, 0)
    assert (bc.inside, bc.outside) == (2, 1)
    bc = boundary_counts(complete_graph(4), set(), 3)
    assert (bc.inside, bc.outside) == (0, 3)


def test_boundary_counts_bad_vertex():
    with pytest.raises(GraphError):
        boundary_counts(cycle_graph(5), {0}, 9)


def test_is_alliance_examples():
    c5 = cycle_graph(5)
    assert is_alliance(c5, {0, 1}, K.DEFENSIVE)
    assert not is_alliance(c5, {0}, K.DEFENSIVE)
    assert is_alliance(c5, {0, 1, 2}, K.GLOBAL_DEFENSIVE)
    assert not is_alliance(c5, {0, 1}, K.GLOBAL_DEFENSIVE)


def test_global_defensive_c5_exhaustive():
    c5 = cycle_graph(5)
    hits = [s for k in range(1, 6) for s in combinations(range(5), k) if is_alliance(c5, s, K.GLOBAL_DEFENSIVE)]
    assert min(len(s) for s in hits) == 3
    assert (0, 1, 2) in hits and (0, 2) not in hits


def test_empty_set_is_an_error():
    with pytest.raises(GraphError, match="nonempty"):
        is_alliance(cycle_graph(5), set(), K.DEFENSIVE)


def test_minimality_examples():
    c5 = cycle_graph(5)
    assert is_minimal_alliance(c5, {0, 1}, K.DEFENSIVE)
    assert not is_minimal_alliance(c5, {0, 1, 2}, K.DEFENSIVE)
    assert is_minimal_alliance(complete_graph(4), {0, 1, 2}, K.STRONG)


def test_minimality_requires_alliance():
    with pytest.raises(GraphError):
        is_minimal_alliance(cycle_graph(5), {0}, K.DEFENSIVE)


def test_minimality_large_local_set_uses_connected_subsets():
    # whole C_14 is a defensive alliance; any adjacent pair is a smaller one
    g = cycle_graph(14)
    assert is_minimal_alliance(g, range(14), K.DEFENSIVE) is False
    # two disjoint 7-paths: disconnected, so not minimal
    assert is_minimal_alliance(g, [*range(7), *range(7, 14)], K.STRONG) is False


def test_global_minimality_cap_reports_unverified():
    g = complete_graph(18)
    assert is_minimal_alliance(g, range(17), K.GLOBAL_STRONG) is None


def _all_masks(n):
    return range(1, 1 << n)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_kind_monotonicity(g):
    for mask in _all_masks(g.n):
        ok = {k: is_alliance(g, mask, k) for k in ALL_KINDS}
        assert not ok[K.STRONG] or ok[K.DEFENSIVE]
        for base, glob, conn in (
            (K.DEFENSIVE, K.GLOBAL_DEFENSIVE, K.GLOBAL_CONNECTED_DEFENSIVE),
            (K.STRONG, K.GLOBAL_STRONG, K.GLOBAL_CONNECTED_STRONG),
        ):
            assert not ok[conn] or ok[glob]
            assert not ok[glob] or ok[base]
        assert not ok[K.GLOBAL_STRONG] or ok[K.GLOBAL_DEFENSIVE]


@settings(max_examples=100)
@given(graphs(max_n=9))
def test_whole_vertex_set_is_global_strong(g):
    full = g.full_mask
    assert is_alliance(g, full, K.GLOBAL_STRONG)
    assert is_alliance(g, full, K.GLOBAL_CONNECTED_STRONG) == is_connected_set(g, full)


@settings(max_examples=100)
@given(graphs(max_n=9), st.data())
def test_boundary_partition(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    for v in range(g.n):
        bc = boundary_counts(g, s, v)
        assert bc.inside + bc.outside == g.degrees[v]
        if v in s:
            assert bc.inside <= len(s) - 1


def _scalar_definition(g, mask, kind):
    members = [v for v in range(g.n) if mask >> v & 1]
    for v in members:
        inside = sum(1 for u in g.neighbors(v) if mask >> u & 1)
        outside = g.degrees[v] - inside
        if kind.strong and inside < outside:
            return False
        if not kind.strong and inside + 1 < outside:
            return False
    if kind.is_global:
        for u in range(g.n):
            if not mask >> u & 1 and not any(mask >> w & 1 for w in g.neighbors(u)):
                return False
    if kind.connected and not is_connected_set(g, mask):
        return False
    return True


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_vectorised_table_matches_definition(g):
    for kind in ALL_KINDS:
        table = alliance_table(g, kind)
        assert not table[0]
        for mask in _all_masks(g.n):
            assert bool(table[mask]) == _scalar_definition(g, mask, kind) == is_alliance(g, mask, kind)


def test_kind_parse():
    assert AllianceKind.parse("global-connected-strong") is K.GLOBAL_CONNECTED_STRONG
    with pytest.raises(ValueError, match="choose from"):
        AllianceKind.parse("offensive")
