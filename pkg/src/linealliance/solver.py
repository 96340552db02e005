"""Exact alliance numbers with witnesses.

Local kinds (defensive, strong) are found by enumerating connected subsets
in increasing size: every minimum alliance of these kinds is connected, so
the first size with a hit is optimal.  Global kinds use a depth-first
branch-and-bound over include/exclude decisions, run as a sequence of
feasibility queries with a growing size limit.  ``brute_force_oracle`` is
an independent check that shares no search code with either path.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import bounds
from .graph import Graph, GraphError, bits, closure, components, induced_subgraph, to_mask
from .kernel import AllianceKind, alliance_mask_ok, alliance_table
from .linegraph import line_graph
from .subsets import connected_subsets_of_size

ORACLE_CAP = 16


class InfeasibleError(GraphError):
    """No alliance of the requested kind exists (connected kinds on disconnected graphs)."""


class OracleCapError(GraphError):
    """Graph too large for the exhaustive oracle."""


@dataclass(frozen=True)
class Budget:
    """Resource limits for one solve; ``None`` means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    @classmethod
    def from_env(cls, max_nodes: int | None = None, max_seconds: float | None = None) -> "Budget":
        if max_nodes is None and os.environ.get("ALLIANCE_BUDGET_NODES"):
            max_nodes = int(os.environ["ALLIANCE_BUDGET_NODES"])
        return cls(max_nodes=max_nodes, max_seconds=max_seconds)


@dataclass(frozen=True)
class SolveResult:
    kind: AllianceKind
    value: int | None
    witness: tuple[int, ...]
    method: str
    nodes_explored: int
    certified: bool = True
    lower_bound: int | None = None
    witness_edges: tuple[tuple[int, int], ...] | None = field(default=None)

    @property
    def status(self) -> str:
        return "optimal" if self.certified else "lower-bound-only"

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "value": self.value,
            "witness": list(self.witness),
        }
        if self.witness_edges is not None:
            out["witness_edges"] = [list(e) for e in self.witness_edges]
        out.update(
            method=self.method,
            nodes_explored=self.nodes_explored,
            certified=self.certified,
            status=self.status,
            lower_bound=self.lower_bound if self.lower_bound is not None else self.value,
        )
        return out


class _BudgetExhausted(Exception):
    pass


class _Counter:
    def __init__(self, budget: Budget | None):
        self.nodes = 0
        self.lower = 1
        budget = budget or Budget()
        self.max_nodes = budget.max_nodes
        self.deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def enumerate_connected_subsets(g: Graph, max_size: int) -> Iterator[tuple[int, ...]]:
    """Every vertex subset of size <= ``max_size`` inducing a connected subgraph.

    Sizes are non-decreasing; within a size the order is deterministic.
    """
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    for k in range(1, min(max_size, g.n) + 1):
        for mask in connected_subsets_of_size(g, k):
            yield _lex_key(mask)


# --------------------------------------------------------------------------
# local kinds


def _eligible(g: Graph, kind: AllianceKind, k: int) -> int:
    # members of a k-set have at most k-1 neighbours inside it
    return to_mask(v for v in range(g.n) if kind.need(g.degrees[v]) <= k - 1)


def _local_hits(g: Graph, kind: AllianceKind, k: int, counter: _Counter) -> list[int]:
    hits = []
    for mask in connected_subsets_of_size(g, k, _eligible(g, kind, k)):
        counter.tick()
        if alliance_mask_ok(g, mask, kind):
            hits.append(mask)
    return hits


def _solve_local(g: Graph, kind: AllianceKind, counter: _Counter) -> tuple[int, int]:
    for k in range(1, g.n + 1):
        hits = _local_hits(g, kind, k, counter)
        if hits:
            return k, min(hits, key=_lex_key)
        counter.lower = k + 1
    raise AssertionError("every component is an alliance; search cannot come up empty")


def minimum_alliances(g: Graph, kind: AllianceKind, budget: Budget | None = None) -> list[tuple[int, ...]]:
    """All minimum alliances of a local kind, sorted lexicographically."""
    if kind.is_global:
        raise ValueError("minimum_alliances enumerates local kinds only")
    counter = _Counter(budget)
    for k in range(1, g.n + 1):
        hits = _local_hits(g, kind, k, counter)
        if hits:
            return sorted(_lex_key(h) for h in hits)
    raise AssertionError("unreachable")


# --------------------------------------------------------------------------
# global kinds


class _GlobalSearch:
    """Branch-and-bound for global (and global-connected) alliances on a connected graph."""

    def __init__(self, g: Graph, kind: AllianceKind, counter: _Counter):
        self.g = g
        self.kind = kind
        self.counter = counter
        self.adj = g.adj
        self.full = g.full_mask
        self.need = [kind.need(d) for d in g.degrees]
        self.closed = [g.adj[v] | (1 << v) for v in range(g.n)]
        # branching preference: higher degree first, then lower id
        self.rank = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))

    def _ordered(self, mask: int) -> list[int]:
        return [v for v in self.rank if mask >> v & 1]

    def search(self, inside: int, outside: int, limit: int) -> int | None:
        """A feasible set of size <= ``limit`` containing ``inside``, avoiding ``outside``."""
        self.counter.tick()
        adj = self.adj
        und = self.full & ~inside & ~outside
        size = inside.bit_count()

        worst = 0
        pick = -1
        pick_slack = None
        dominated = inside
        for v in bits(inside):
            dominated |= adj[v]
            deficit = self.need[v] - (adj[v] & inside).bit_count()
            if deficit > 0:
                slack = (adj[v] & und).bit_count() - deficit
                if slack < 0:
                    return None
                if deficit > worst:
                    worst = deficit
                if pick_slack is None or slack < pick_slack:
                    pick, pick_slack = v, slack
        if size + worst > limit:
            return None

        undominated = self.full & ~dominated
        if undominated:
            for v in bits(undominated & outside):
                if not adj[v] & und:
                    return None
            cover = 0
            best_u, best_opts = -1, None
            for c in bits(und):
                cover = max(cover, (self.closed[c] & undominated).bit_count())
            for u in bits(undominated):
                opts = (self.closed[u] & und).bit_count()
                if best_opts is None or opts < best_opts:
                    best_u, best_opts = u, opts
            need_more = -(-undominated.bit_count() // cover)
            if size + need_more > limit:
                return None

        if self.kind.connected and inside:
            low = inside & -inside
            if closure(self.g, low, inside | und) & inside != inside:
                return None

        if pick < 0 and not undominated:
            if not self.kind.connected or closure(self.g, inside & -inside, inside) == inside:
                return inside
        if size >= limit:
            return None

        if pick >= 0:
            cands = adj[pick] & und
        elif undominated:
            cands = self.closed[best_u] & und
        else:
            comp = closure(self.g, inside & -inside, inside)
            grow = 0
            for v in bits(comp):
                grow |= adj[v]
            cands = grow & und

        excluded = 0
        for c in self._ordered(cands):
            found = self.search(inside | (1 << c), outside | excluded, limit)
            if found is not None:
                return found
            excluded |= 1 << c
        return None

    def lex_least(self, limit: int, witness: int) -> int:
        inside = outside = 0
        for v in range(self.g.n):
            bit = 1 << v
            if witness & bit:
                inside |= bit
                continue
            found = self.search(inside | bit, outside, limit)
            if found is not None:
                witness = found
                inside |= bit
            else:
                outside |= bit
        return witness


def _global_start(g: Graph, kind: AllianceKind) -> int:
    lows = [1]
    defensive_lb, strong_lb = bounds.spectral_style_global_bounds(g)
    lows.append(strong_lb if kind.strong else defensive_lb)
    if kind.connected:
        lows.append(bounds.connected_global_bounds(g)[0])
    return max(lows)


def _solve_global_component(g: Graph, kind: AllianceKind, counter: _Counter) -> tuple[int, int]:
    engine = _GlobalSearch(g, kind, counter)
    limit = _global_start(g, kind)
    while True:
        found = engine.search(0, 0, limit)
        if found is not None:
            limit = found.bit_count()
            return limit, engine.lex_least(limit, found)
        limit += 1
        counter.lower = limit


def min_alliance(g: Graph, kind: AllianceKind, budget: Budget | None = None) -> SolveResult:
    if g.n < 1:
        raise GraphError("alliance numbers need at least one vertex")
    counter = _Counter(budget)
    if not kind.is_global:
        method = "enumeration"
        try:
            value, witness = _solve_local(g, kind, counter)
        except _BudgetExhausted:
            return SolveResult(kind, None, (), method, counter.nodes, False, counter.lower)
        return SolveResult(kind, value, _lex_key(witness), method, counter.nodes, True, value)

    comps = components(g)
    if kind.connected and len(comps) > 1:
        raise InfeasibleError(f"{kind.value} alliance needs a connected graph ({len(comps)} components)")
    method = "branch-and-bound"
    total = 0
    witness = 0
    done_lower = 0
    for i, comp in enumerate(comps):
        sub, labels = induced_subgraph(g, comp)
        counter.lower = 1
        try:
            value, mask = _solve_global_component(sub, kind, counter)
        except _BudgetExhausted:
            lower = done_lower + counter.lower + (len(comps) - 1 - i)
            return SolveResult(kind, None, (), method, counter.nodes, False, lower)
        total += value
        done_lower += value
        witness |= to_mask(labels[i] for i in bits(mask))
    return SolveResult(kind, total, _lex_key(witness), method, counter.nodes, True, total)


def brute_force_oracle(g: Graph, kind: AllianceKind, cap: int = ORACLE_CAP) -> SolveResult:
    """Minimum over all ``2**n - 1`` nonempty subsets, via the kernel's predicate table."""
    if g.n < 1:
        raise GraphError("alliance numbers need at least one vertex")
    if g.n > cap:
        raise OracleCapError(f"oracle limited to n <= {cap}, got n={g.n}")
    table = alliance_table(g, kind)
    hits = np.flatnonzero(table)
    if hits.size == 0:
        raise InfeasibleError(f"no {kind.value} alliance exists")
    sizes = np.bitwise_count(hits.astype(np.uint64))
    best = int(sizes.min())
    witness = min((_lex_key(int(h)) for h in hits[sizes == best]), key=lambda t: t)
    return SolveResult(kind, best, witness, "oracle", (1 << g.n) - 1, True, best)


def line_alliance_number(g: Graph, kind: AllianceKind, budget: Budget | None = None,
                         oracle: bool = False) -> SolveResult:
    lg = line_graph(g)
    res = brute_force_oracle(lg.graph, kind) if oracle else min_alliance(lg.graph, kind, budget)
    return SolveResult(
        res.kind, res.value, res.witness, res.method, res.nodes_explored,
        res.certified, res.lower_bound, tuple(lg.edges_for(res.witness)),
    )
