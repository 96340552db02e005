"""Closed-form bounds, exact values and small-value characterizations.

Everything here is computed from degrees, diameter and small pattern scans
of the input graph; nothing calls the exact solver except
:func:`characteristic_set_theorem_check`, which needs the minimum alliances
of the line graph as input to the statement it checks.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import isqrt

from .graph import Graph, GraphError, bits, components, degree_sequence, encode_graph6, metrics, to_mask
from .kernel import AllianceKind, alliance_mask_ok
from .linegraph import characteristic_set, line_graph

NOT_APPLICABLE = None


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_sqrt_minus_one(x: int) -> int:
    """``ceil(sqrt(x) - 1)`` in exact integer arithmetic."""
    if x == 0:
        return -1
    return isqrt(x - 1)


@dataclass(frozen=True)
class BoundEntry:
    id: str
    target: str
    applicable: bool
    reason: str
    lower: int | None = None
    upper: int | None = None
    exact: int | None = None
    citation: str = ""


@dataclass
class BoundReport:
    graph6: str
    n: int
    m: int
    degree_sequence: list[int]
    entries: list[BoundEntry] = field(default_factory=list)
    small_alliance: dict | None = None
    small_line_alliance: dict | None = None
    comparison: str | None = None

    def to_json(self) -> dict:
        out = asdict(self)
        out["entries"] = [asdict(e) for e in self.entries]
        return out

    def for_target(self, target: str) -> list[BoundEntry]:
        return [e for e in self.entries if e.target == target and e.applicable]


def _need_edges(g: Graph, what: str) -> None:
    if g.m == 0:
        raise GraphError(f"{what} needs a graph with at least one edge")


# --------------------------------------------------------------------------
# line-graph alliance numbers from degrees


def thcota_bounds(g: Graph) -> tuple[BoundEntry, BoundEntry]:
    """Degree sandwich for the strong and plain alliance numbers of ``L(g)``.

    ``ceil((dn + dn1)/2) <= â(L) <= d1`` and ``ceil((dn + dn1 - 1)/2) <= a(L) <= d1``,
    with ``a(L) <= d1 - 1`` when exactly one vertex has degree ``d1``.
    """
    _need_edges(g, "the degree sandwich")
    seq = degree_sequence(g)
    d1, dn, dn1 = seq[0], seq[-1], seq[-2]
    unique_max = seq.count(d1) == 1
    strong = BoundEntry(
        id="degree-sandwich", target="â(L)", applicable=True, reason="m >= 1",
        lower=ceil_div(dn + dn1, 2), upper=d1,
        citation="line-graph alliance degree sandwich (strong)",
    )
    plain = BoundEntry(
        id="degree-sandwich", target="a(L)", applicable=True,
        reason="m >= 1; unique vertex of maximum degree" if unique_max else "m >= 1",
        lower=ceil_div(dn + dn1 - 1, 2), upper=d1 - 1 if unique_max else d1,
        citation="line-graph alliance degree sandwich",
    )
    return plain, strong


def regular_exact(g: Graph) -> int | None:
    """``δ`` when ``g`` is ``δ``-regular with ``δ > 0``: then a(L) = â(L) = δ."""
    if g.n == 0:
        return NOT_APPLICABLE
    d = g.degrees[0]
    if d > 0 and all(x == d for x in g.degrees):
        return d
    return NOT_APPLICABLE


def detect_semiregular_bipartite(g: Graph) -> tuple[int, int] | None:
    """``(δ1, δ2)`` with ``δ1 >= δ2`` if ``g`` is a (δ1, δ2)-semiregular bipartite graph."""
    if g.m == 0:
        return None
    pair = None
    for comp in components(g):
        colour = {comp[0]: 0}
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
        side_degrees = [{g.degrees[v] for v in comp if colour[v] == c} for c in (0, 1)]
        if any(len(s) != 1 for s in side_degrees):
            return None
        this = tuple(sorted((side_degrees[0].pop(), side_degrees[1].pop()), reverse=True))
        if pair is None:
            pair = this
        elif pair != this:
            return None
    return pair


def semiregular_exact(g: Graph) -> tuple[int, int] | None:
    """``(a(L), â(L)) = (ceil((δ1+δ2-1)/2), ceil((δ1+δ2)/2))`` for semiregular bipartite ``g``."""
    found = detect_semiregular_bipartite(g)
    if found is None:
        return NOT_APPLICABLE
    d1, d2 = found
    return ceil_div(d1 + d2 - 1, 2), ceil_div(d1 + d2, 2)


# --------------------------------------------------------------------------
# small alliance numbers


@dataclass(frozen=True)
class SmallAllianceClass:
    value: int | None          # 1, 2, 3, or None meaning ">= 4"
    pattern: str | None
    vertices: tuple[int, ...] = ()
    # for the line-graph classifier: the edges of g forming the alliance in L(g)
    edges: tuple[tuple[int, int], ...] = ()

    @property
    def label(self) -> str:
        return ">=4" if self.value is None else str(self.value)

    def to_json(self) -> dict:
        out = {"class": self.label, "pattern": self.pattern, "vertices": list(self.vertices)}
        if self.edges:
            out["edges"] = [list(e) for e in self.edges]
        return out


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def classify_small_alliance(g: Graph) -> SmallAllianceClass:
    """Decide whether ``a(g)`` is 1, 2, 3 or at least 4 from local patterns."""
    deg, adj = g.degrees, g.adj
    for v in range(g.n):
        if deg[v] <= 1:
            return SmallAllianceClass(1, "leaf", (v,))
    for u, v in g.edges:
        if deg[u] <= 3 and deg[v] <= 3:
            return SmallAllianceClass(2, "K_2", (u, v))
    # induced P_3 u-v-w: ends of degree <= 3, middle of degree <= 5
    for v in range(g.n):
        if deg[v] > 5:
            continue
        ends = [u for u in bits(adj[v]) if deg[u] <= 3]
        for u, w in combinations(ends, 2):
            if not adj[u] >> w & 1:
                return SmallAllianceClass(3, "P_3", (u, v, w))
    for u, v, w in _triangles(g):
        if deg[u] <= 5 and deg[v] <= 5 and deg[w] <= 5:
            return SmallAllianceClass(3, "K_3", (u, v, w))
    return SmallAllianceClass(None, None)


def _triangles(g: Graph):
    adj = g.adj
    for u, v in g.edges:
        for w in bits(adj[u] & adj[v] & ~((1 << (v + 1)) - 1)):
            yield u, v, w


def classify_small_line_alliance(g: Graph) -> SmallAllianceClass:
    """Decide whether ``a(L(g))`` is 1, 2, 3 or at least 4 by scanning ``g`` itself.

    Patterns are ordinary (not necessarily induced) subgraphs of ``g`` whose
    degree sums, taken in ``g``, keep the matching line-vertices' degrees low.
    """
    _need_edges(g, "the line-graph classifier")
    deg, adj = g.degrees, g.adj
    for u, v in g.edges:
        if deg[u] == 1 and deg[v] == 1:
            return SmallAllianceClass(1, "K_2-component", (u, v), ((u, v),))
    for u, v in g.edges:
        if {deg[u], deg[v]} == {1, 2}:
            return SmallAllianceClass(1, "leaf", (u, v), ((u, v),))

    # P_3 u-v-w with deg(u)+deg(v) <= 5 and deg(v)+deg(w) <= 5
    for v in range(g.n):
        ends = [u for u in bits(adj[v]) if deg[u] + deg[v] <= 5]
        if len(ends) >= 2:
            u, w = ends[0], ends[1]
            return SmallAllianceClass(2, "P_3", (u, v, w), (_edge(u, v), _edge(v, w)))

    # P_4 u-v-w-x: outer edges with sums <= 5, middle edge with sum <= 7
    for v, w in g.edges:
        if deg[v] + deg[w] > 7:
            continue
        for a, b in ((v, w), (w, v)):
            us = [u for u in bits(adj[a]) if u != b and deg[u] + deg[a] <= 5]
            xs = [x for x in bits(adj[b]) if x != a and deg[x] + deg[b] <= 5]
            for u in us:
                for x in xs:
                    if u != x:
                        return SmallAllianceClass(
                            3, "P_4", (u, a, b, x), (_edge(u, a), _edge(a, b), _edge(b, x))
                        )
    for u, v, w in _triangles(g):
        if deg[u] + deg[v] <= 7 and deg[u] + deg[w] <= 7 and deg[v] + deg[w] <= 7:
            return SmallAllianceClass(3, "K_3", (u, v, w), (_edge(u, v), _edge(u, w), _edge(v, w)))
    for v in range(g.n):
        leaves = [u for u in bits(adj[v]) if deg[u] + deg[v] <= 7]
        if len(leaves) >= 3:
            u, w, x = leaves[:3]
            return SmallAllianceClass(3, "K_{1,3}", (v, u, w, x), (_edge(v, u), _edge(v, w), _edge(v, x)))
    return SmallAllianceClass(None, None)


# --------------------------------------------------------------------------
# global alliance lower bounds


def global_sqrt_bound(g: Graph) -> int | None:
    """``γ_a(L(g)) >= ceil(sqrt(m + 4) - 1)`` for graphs with more than six edges."""
    if g.m <= 6:
        return NOT_APPLICABLE
    return ceil_sqrt_minus_one(g.m + 4)


def spectral_style_global_bounds(g: Graph) -> tuple[int, int]:
    """``(ceil(2n/(d1+3)), ceil(n/(floor(d1/2)+1)))``: lower bounds on γ_a(g), γ_â(g)."""
    if g.n < 1:
        raise GraphError("bounds need at least one vertex")
    d1 = max(g.degrees)
    return ceil_div(2 * g.n, d1 + 3), ceil_div(g.n, d1 // 2 + 1)


def global_degree_bounds(g: Graph) -> tuple[int, int]:
    """``(ceil(2m/(d1+d2+1)), ceil(2m/(d1+d2)))``: lower bounds on γ_a(L(g)), γ_â(L(g))."""
    _need_edges(g, "the line-graph degree bounds")
    seq = degree_sequence(g)
    top = seq[0] + seq[1]
    return ceil_div(2 * g.m, top + 1), ceil_div(2 * g.m, top)


def connected_global_bounds(g: Graph) -> tuple[int, int | None]:
    """Diameter bounds ``γ_ca(g) >= ceil(sqrt(D+n)-1)``, ``γ_ca(L(g)) >= ceil(sqrt(D+m-1)-1)``.

    The line-graph value is ``None`` for the edgeless single vertex.
    """
    met = metrics(g)
    if not met.connected or g.n == 0:
        raise GraphError("diameter bounds need a connected graph")
    d = met.diameter
    line = ceil_sqrt_minus_one(d + g.m - 1) if g.m >= 1 else None
    return ceil_sqrt_minus_one(d + g.n), line


def comparison_verdict(g: Graph) -> str:
    """Whether ``a(g) <= a(L(g))`` follows from degrees alone."""
    _need_edges(g, "the comparison")
    seq = degree_sequence(g)
    dn, dn1 = seq[-1], seq[-2]
    if ceil_div(g.n, 2) <= ceil_div(dn + dn1 - 1, 2) or g.n < 2 * dn:
        return "guaranteed"
    return "inconclusive"


# --------------------------------------------------------------------------
# characteristic sets


@dataclass(frozen=True)
class CharacteristicSetVerdict:
    line_alliance_number: int
    minimum_line_alliances: int
    hypothesis_met: bool
    line_alliance: tuple[int, ...] | None
    characteristic_set: tuple[int, ...] | None
    base_witness: tuple[int, ...] | None
    holds: bool | None
    transfer_ok: bool

    @property
    def status(self) -> str:
        if not self.hypothesis_met:
            return "hypothesis not met"
        return "verified" if self.holds else "violated"

    def to_json(self) -> dict:
        out = asdict(self)
        out["status"] = self.status
        return out


def characteristic_set_theorem_check(g: Graph, cap: int = 16) -> CharacteristicSetVerdict:
    """Check ``a(g) <= a(L(g))`` whenever a minimum defensive alliance of ``L(g)``
    covers a defensive alliance of ``g``.

    Every minimum defensive alliance of ``L(g)`` is examined.  When the
    hypothesis holds, the inequality is confirmed by exhibiting a defensive
    alliance of ``g`` inside the characteristic set with at most ``a(L(g))``
    vertices.  ``transfer_ok`` records that each of those line alliances
    induces a connected subgraph whose characteristic set is connected and has
    at most one more vertex.
    """
    from .graph import is_connected_set
    from .solver import minimum_alliances

    _need_edges(g, "the characteristic-set check")
    if g.m > cap:
        raise GraphError(f"characteristic-set check limited to m <= {cap}, got m={g.m}")
    lg = line_graph(g)
    kind = AllianceKind.DEFENSIVE
    mins = minimum_alliances(lg.graph, kind)
    a_line = len(mins[0])
    transfer_ok = True
    qualifying = None
    for s_l in mins:
        c = characteristic_set(lg, s_l)
        c_mask = to_mask(c)
        if is_connected_set(lg.graph, to_mask(s_l)):
            if not is_connected_set(g, c_mask) or len(c) > len(s_l) + 1:
                transfer_ok = False
        if qualifying is None and alliance_mask_ok(g, c_mask, kind):
            qualifying = (s_l, tuple(c))
    if qualifying is None:
        return CharacteristicSetVerdict(a_line, len(mins), False, None, None, None, None, transfer_ok)
    s_l, c = qualifying
    witness = None
    for k in range(1, a_line + 1):
        for combo in combinations(c, k):
            if alliance_mask_ok(g, to_mask(combo), kind):
                witness = combo
                break
        if witness:
            break
    return CharacteristicSetVerdict(
        a_line, len(mins), True, s_l, c, witness, witness is not None, transfer_ok
    )


# --------------------------------------------------------------------------
# report


def bound_report(g: Graph) -> BoundReport:
    report = BoundReport(encode_graph6(g), g.n, g.m, degree_sequence(g))
    add = report.entries.append
    report.small_alliance = classify_small_alliance(g).to_json() if g.n else None

    d1 = max(g.degrees) if g.n else 0
    half = ceil_div(g.n, 2)
    add(BoundEntry("half-order", "a(Γ)", g.n >= 1, "n >= 1", upper=half,
                   citation="alliance number at most half the order"))
    gd, gs = spectral_style_global_bounds(g)
    add(BoundEntry("global-degree-bound", "γ_a(Γ)", True, "n >= 1", lower=gd,
                   citation=f"ceil(2n/(d1+3)) with d1={d1}"))
    add(BoundEntry("global-degree-bound", "γ_â(Γ)", True, "n >= 1", lower=gs,
                   citation=f"ceil(n/(floor(d1/2)+1)) with d1={d1}"))
    met = metrics(g)
    if met.connected:
        cg, cl = connected_global_bounds(g)
        add(BoundEntry("diameter-bound", "γ_ca(Γ)", True, "connected", lower=cg,
                       citation=f"ceil(sqrt(D+n)-1) with D={met.diameter}"))
    else:
        cl = None
        add(BoundEntry("diameter-bound", "γ_ca(Γ)", False, "disconnected: diameter infinite"))

    if g.m == 0:
        for target in ("a(L)", "â(L)", "γ_a(L)", "γ_â(L)", "γ_ca(L)"):
            add(BoundEntry("line-graph", target, False, "m = 0: line graph is empty"))
        return report

    report.small_line_alliance = classify_small_line_alliance(g).to_json()
    report.comparison = comparison_verdict(g)
    report.entries.extend(thcota_bounds(g))

    reg = regular_exact(g)
    for target in ("a(L)", "â(L)"):
        if reg is None:
            add(BoundEntry("regular-corollary", target, False, "not regular with positive degree"))
        else:
            add(BoundEntry("regular-corollary", target, True, f"{reg}-regular",
                           lower=reg, upper=reg, exact=reg, citation="regular graphs: a(L) = â(L) = δ"))
    semi = detect_semiregular_bipartite(g)
    if semi is None:
        for target in ("a(L)", "â(L)"):
            add(BoundEntry("semiregular-exact", target, False, "not semiregular bipartite"))
    else:
        av, sv = semiregular_exact(g)
        reason = f"({semi[0]},{semi[1]})-semiregular bipartite"
        add(BoundEntry("semiregular-exact", "a(L)", True, reason, lower=av, upper=av, exact=av,
                       citation="ceil((d1+d2-1)/2)"))
        add(BoundEntry("semiregular-exact", "â(L)", True, reason, lower=sv, upper=sv, exact=sv,
                       citation="ceil((d1+d2)/2)"))

    sq = global_sqrt_bound(g)
    add(BoundEntry("global-sqrt-bound", "γ_a(L)", sq is not None,
                   "m > 6" if sq is not None else "requires m > 6", lower=sq,
                   citation="ceil(sqrt(m+4)-1)"))
    ld, ls = global_degree_bounds(g)
    add(BoundEntry("line-degree-bound", "γ_a(L)", True, "m >= 1", lower=ld,
                   citation="ceil(2m/(d1+d2+1))"))
    add(BoundEntry("line-degree-bound", "γ_â(L)", True, "m >= 1", lower=ls,
                   citation="ceil(2m/(d1+d2))"))
    if met.connected:
        add(BoundEntry("diameter-bound", "γ_ca(L)", True, "connected", lower=cl,
                       citation=f"ceil(sqrt(D+m-1)-1) with D={met.diameter}"))
    else:
        add(BoundEntry("diameter-bound", "γ_ca(L)", False, "disconnected: diameter infinite"))
    return report
