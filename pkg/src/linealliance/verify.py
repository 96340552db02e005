"""Corpus-wide verification harness.

Every check compares a closed-form statement from :mod:`bounds` (or a
structural identity) against exact values computed by :mod:`solver` and,
where the graph is small enough, the brute-force oracle.  A run collects
per-graph outcomes and any violations; each violation carries the graph6
string needed to replay it.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Callable, Iterable

from . import bounds
from .corpus import connected_upto
from .graph import ACYCLIC, Graph, GraphFamily, encode_graph6, generate, metrics, parse_graph6, read_graph6_lines, star_graph
from .kernel import ALL_KINDS, AllianceKind, is_alliance, is_minimal_alliance
from .linegraph import edge_vertex_degree, line_graph
from .solver import Budget, SolveResult, brute_force_oracle, min_alliance

K = AllianceKind


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 7
    min_n: int = 1
    corpus_files: tuple[str, ...] = ()
    family: GraphFamily | None = None
    checks: tuple[str, ...] | None = None
    oracle_cap: int = 16
    line_oracle_cap: int = 16
    charset_max_n: int = 6
    budget: Budget = field(default_factory=Budget)
    jobs: int = 1

    def corpus_descriptor(self) -> str:
        if self.family is not None:
            return f"family {self.family}"
        if self.corpus_files:
            return "files " + ", ".join(self.corpus_files)
        return f"bundled connected graphs, {self.min_n} <= n <= {self.max_n}"


class _BudgetSkip(Exception):
    pass


class GraphContext:
    """Lazily computed exact values for one graph and its line graph."""

    def __init__(self, g: Graph, cfg: VerifyConfig):
        self.g = g
        self.cfg = cfg
        self.g6 = encode_graph6(g)
        self.metrics = metrics(g)
        self.lg = line_graph(g) if g.m else None
        self._solved: dict[tuple[str, AllianceKind], SolveResult] = {}
        self._oracle: dict[tuple[str, AllianceKind], SolveResult] = {}
        self.values: dict[str, int] = {}

    def host(self, which: str) -> Graph:
        if which == "G":
            return self.g
        if self.lg is None:
            raise ValueError("edgeless graph has no line graph")
        return self.lg.graph

    def feasible(self, which: str, kind: AllianceKind) -> bool:
        if which == "L" and self.lg is None:
            return False
        if kind.connected:
            h = self.host(which)
            return metrics(h).connected
        return True

    def solve(self, which: str, kind: AllianceKind) -> SolveResult:
        key = (which, kind)
        if key not in self._solved:
            res = min_alliance(self.host(which), kind, self.cfg.budget)
            if not res.certified:
                raise _BudgetSkip(f"{kind.value} on {which}: budget exhausted")
            self._solved[key] = res
            self.values[f"{kind.symbol}({'Γ' if which == 'G' else 'L'})"] = res.value
        return self._solved[key]

    def value(self, which: str, kind: AllianceKind) -> int:
        return self.solve(which, kind).value

    def oracle(self, which: str, kind: AllianceKind) -> SolveResult:
        key = (which, kind)
        if key not in self._oracle:
            cap = self.cfg.oracle_cap if which == "G" else self.cfg.line_oracle_cap
            self._oracle[key] = brute_force_oracle(self.host(which), kind, cap=cap)
        return self._oracle[key]


CheckFn = Callable[[GraphContext], Iterable[str]]
CHECKS: dict[str, CheckFn] = {}
DESCRIPTIONS: dict[str, str] = {}


def check(name: str, description: str):
    def register(fn: CheckFn) -> CheckFn:
        CHECKS[name] = fn
        DESCRIPTIONS[name] = description
        return fn
    return register


def _hosts(ctx: GraphContext) -> list[str]:
    return ["G", "L"] if ctx.lg is not None else ["G"]


@check("oracle-equivalence", "solver value and witness equal the brute-force oracle's")
def _oracle_equivalence(ctx: GraphContext):
    for which in _hosts(ctx):
        h = ctx.host(which)
        cap = ctx.cfg.oracle_cap if which == "G" else ctx.cfg.line_oracle_cap
        if h.n > cap:
            continue
        for kind in ALL_KINDS:
            if not ctx.feasible(which, kind):
                continue
            s, o = ctx.solve(which, kind), ctx.oracle(which, kind)
            if (s.value, s.witness) != (o.value, o.witness):
                yield f"{which} {kind.value}: solver {s.value} {list(s.witness)} vs oracle {o.value} {list(o.witness)}"


@check("witness-validity", "witnesses are alliances of the right size; local witnesses minimal and connected")
def _witness_validity(ctx: GraphContext):
    from .graph import is_connected_set, to_mask
    for which in _hosts(ctx):
        h = ctx.host(which)
        for kind in ALL_KINDS:
            if not ctx.feasible(which, kind):
                continue
            res = ctx.solve(which, kind)
            if len(res.witness) != res.value or not is_alliance(h, res.witness, kind):
                yield f"{which} {kind.value}: witness {list(res.witness)} invalid"
                continue
            if not kind.is_global:
                if not is_minimal_alliance(h, res.witness, kind):
                    yield f"{which} {kind.value}: witness not minimal"
                if not is_connected_set(h, to_mask(res.witness)):
                    yield f"{which} {kind.value}: minimum witness not connected"


@check("order-chain", "a <= â, a <= γ_a <= γ_ca, â <= γ_â <= γ_câ, γ_a <= γ_â")
def _order_chain(ctx: GraphContext):
    for which in _hosts(ctx):
        v = {k: ctx.value(which, k) for k in ALL_KINDS if ctx.feasible(which, k)}
        pairs = [
            (K.DEFENSIVE, K.STRONG), (K.DEFENSIVE, K.GLOBAL_DEFENSIVE),
            (K.GLOBAL_DEFENSIVE, K.GLOBAL_CONNECTED_DEFENSIVE), (K.STRONG, K.GLOBAL_STRONG),
            (K.GLOBAL_STRONG, K.GLOBAL_CONNECTED_STRONG), (K.GLOBAL_DEFENSIVE, K.GLOBAL_STRONG),
        ]
        for lo, hi in pairs:
            if lo in v and hi in v and v[lo] > v[hi]:
                yield f"{which}: {lo.symbol}={v[lo]} > {hi.symbol}={v[hi]}"


@check("half-order", "a(Γ) <= ceil(n/2)")
def _half_order(ctx: GraphContext):
    a = ctx.value("G", K.DEFENSIVE)
    if a > bounds.ceil_div(ctx.g.n, 2):
        yield f"a={a} > ceil(n/2)={bounds.ceil_div(ctx.g.n, 2)}"


@check("line-structure", "line-vertex degree is deg(u)+deg(v)-2 and |E_l| = sum C(deg, 2)")
def _line_structure(ctx: GraphContext):
    if ctx.lg is None:
        return
    lg = ctx.lg
    if lg.graph.n != ctx.g.m:
        yield f"|V_l|={lg.graph.n} != m={ctx.g.m}"
    expected = sum(comb(d, 2) for d in ctx.g.degrees)
    if lg.graph.m != expected:
        yield f"|E_l|={lg.graph.m} != {expected}"
    for i, (u, v) in enumerate(lg.edge_of):
        if lg.graph.degrees[i] != edge_vertex_degree(ctx.g, u, v):
            yield f"line-vertex {i}={{{u},{v}}} degree mismatch"


@check("degree-sandwich", "degree lower/upper bounds on a(L) and â(L)")
def _degree_sandwich(ctx: GraphContext):
    if ctx.lg is None:
        return
    plain, strong = bounds.thcota_bounds(ctx.g)
    for entry, kind in ((plain, K.DEFENSIVE), (strong, K.STRONG)):
        val = ctx.value("L", kind)
        if not entry.lower <= val <= entry.upper:
            yield f"{entry.target}={val} outside [{entry.lower}, {entry.upper}] ({entry.reason})"


@check("star-construction", "edges at a max-degree vertex form a strong alliance of L (minus one edge: defensive, if unique)")
def _star_construction(ctx: GraphContext):
    if ctx.lg is None:
        return
    g, lg = ctx.g, ctx.lg
    d1 = max(g.degrees)
    hub = g.degrees.index(d1)
    star = sorted(lg.line_vertex(hub, u) for u in g.neighbors(hub))
    if not is_alliance(lg.graph, star, K.STRONG):
        yield f"edges at vertex {hub} are not a strong alliance of L"
    if g.degrees.count(d1) == 1 and d1 >= 2 and not is_alliance(lg.graph, star[1:], K.DEFENSIVE):
        yield f"edges at unique max vertex {hub} minus one are not a defensive alliance of L"


@check("regular-corollary", "δ-regular (δ > 0) implies a(L) = â(L) = δ")
def _regular(ctx: GraphContext):
    if ctx.lg is None:
        return
    d = bounds.regular_exact(ctx.g)
    if d is None:
        return
    for kind in (K.DEFENSIVE, K.STRONG):
        val = ctx.value("L", kind)
        if val != d:
            yield f"{kind.symbol}(L)={val} != δ={d}"


@check("semiregular-exact", "(δ1,δ2)-semiregular bipartite closed forms for a(L), â(L)")
def _semiregular(ctx: GraphContext):
    if ctx.lg is None:
        return
    exact = bounds.semiregular_exact(ctx.g)
    if exact is None:
        return
    for kind, want in zip((K.DEFENSIVE, K.STRONG), exact):
        val = ctx.value("L", kind)
        if val != want:
            yield f"{kind.symbol}(L)={val} != closed form {want}"


@check("small-alliance-classes", "pattern classifier for a(Γ) in {1,2,3,>=4} agrees with the exact value")
def _small_classes(ctx: GraphContext):
    cls = bounds.classify_small_alliance(ctx.g)
    a = ctx.value("G", K.DEFENSIVE)
    if (cls.value or 4) != min(a, 4):
        yield f"classifier {cls.label} vs a(Γ)={a}"
    elif cls.value is not None and not is_alliance(ctx.g, cls.vertices, K.DEFENSIVE):
        yield f"classifier witness {list(cls.vertices)} is not an alliance"


@check("small-line-alliance-classes", "pattern classifier for a(L) in {1,2,3,>=4} agrees with the exact value")
def _small_line_classes(ctx: GraphContext):
    if ctx.lg is None:
        return
    cls = bounds.classify_small_line_alliance(ctx.g)
    a = ctx.value("L", K.DEFENSIVE)
    if (cls.value or 4) != min(a, 4):
        yield f"classifier {cls.label} vs a(L)={a}"
    elif cls.value is not None:
        line_set = [ctx.lg.line_vertex(u, v) for u, v in cls.edges]
        if not is_alliance(ctx.lg.graph, line_set, K.DEFENSIVE):
            yield f"classifier edges {cls.edges} are not an alliance of L"


@check("global-sqrt-bound", "m > 6 implies γ_a(L) >= ceil(sqrt(m+4)-1)")
def _global_sqrt(ctx: GraphContext):
    if ctx.lg is None:
        return
    lb = bounds.global_sqrt_bound(ctx.g)
    if lb is not None:
        val = ctx.value("L", K.GLOBAL_DEFENSIVE)
        if val < lb:
            yield f"γ_a(L)={val} < {lb}"


@check("global-degree-bound", "γ_a >= ceil(2n/(d1+3)) and γ_â >= ceil(n/(floor(d1/2)+1)), on Γ and on L")
def _global_degree(ctx: GraphContext):
    for which in _hosts(ctx):
        lo_a, lo_s = bounds.spectral_style_global_bounds(ctx.host(which))
        va, vs = ctx.value(which, K.GLOBAL_DEFENSIVE), ctx.value(which, K.GLOBAL_STRONG)
        if va < lo_a or vs < lo_s:
            yield f"{which}: (γ_a, γ_â)=({va}, {vs}) below ({lo_a}, {lo_s})"


@check("line-degree-bound", "γ_a(L) >= ceil(2m/(d1+d2+1)), γ_â(L) >= ceil(2m/(d1+d2)), and they follow from the order bound on L")
def _line_degree(ctx: GraphContext):
    if ctx.lg is None:
        return
    lo_a, lo_s = bounds.global_degree_bounds(ctx.g)
    direct_a, direct_s = bounds.spectral_style_global_bounds(ctx.lg.graph)
    if direct_a < lo_a or direct_s < lo_s:
        yield f"order bound on L ({direct_a}, {direct_s}) weaker than degree-sum bound ({lo_a}, {lo_s})"
    va, vs = ctx.value("L", K.GLOBAL_DEFENSIVE), ctx.value("L", K.GLOBAL_STRONG)
    if va < lo_a or vs < lo_s:
        yield f"(γ_a(L), γ_â(L))=({va}, {vs}) below ({lo_a}, {lo_s})"


@check("diameter-bound", "γ_ca(Γ) >= ceil(sqrt(D+n)-1), γ_ca(L) >= ceil(sqrt(D+m-1)-1)")
def _diameter_bound(ctx: GraphContext):
    if not ctx.metrics.connected:
        return
    lo_g, lo_l = bounds.connected_global_bounds(ctx.g)
    val = ctx.value("G", K.GLOBAL_CONNECTED_DEFENSIVE)
    if val < lo_g:
        yield f"γ_ca(Γ)={val} < {lo_g}"
    if lo_l is not None:
        val = ctx.value("L", K.GLOBAL_CONNECTED_DEFENSIVE)
        if val < lo_l:
            yield f"γ_ca(L)={val} < {lo_l}"


@check("diameter-witness", "D <= |S|+1 for connected global witnesses; D(Γ)-1 <= D(L) when m >= 2")
def _diameter_witness(ctx: GraphContext):
    if not ctx.metrics.connected:
        return
    for which in _hosts(ctx):
        d = ctx.metrics.diameter if which == "G" else metrics(ctx.host("L")).diameter
        for kind in (K.GLOBAL_CONNECTED_DEFENSIVE, K.GLOBAL_CONNECTED_STRONG):
            size = ctx.value(which, kind)
            if d > size + 1:
                yield f"{which}: D={d} > |S|+1={size + 1} for {kind.value} witness"
    if ctx.g.m >= 2:
        dl = metrics(ctx.host("L")).diameter
        if ctx.metrics.diameter - 1 > dl:
            yield f"D(Γ)-1={ctx.metrics.diameter - 1} > D(L)={dl}"


@check("comparison-verdict", "a degree-guaranteed comparison implies a(Γ) <= a(L)")
def _comparison(ctx: GraphContext):
    if ctx.lg is None:
        return
    if bounds.comparison_verdict(ctx.g) == "guaranteed":
        a, al = ctx.value("G", K.DEFENSIVE), ctx.value("L", K.DEFENSIVE)
        if a > al:
            yield f"guaranteed but a(Γ)={a} > a(L)={al}"


@check("characteristic-set", "a covering minimum alliance of L implies a(Γ) <= a(L); connectivity transfers")
def _characteristic(ctx: GraphContext):
    if ctx.lg is None or ctx.g.n > ctx.cfg.charset_max_n:
        return
    verdict = bounds.characteristic_set_theorem_check(ctx.g, cap=max(16, ctx.g.m))
    if not verdict.transfer_ok:
        yield "connected line alliance with disconnected or oversized characteristic set"
    if verdict.hypothesis_met:
        if not verdict.holds:
            yield "hypothesis met but no alliance of size <= a(L) inside the characteristic set"
        a, al = ctx.value("G", K.DEFENSIVE), ctx.value("L", K.DEFENSIVE)
        if a > al:
            yield f"hypothesis met but a(Γ)={a} > a(L)={al}"
    ctx.values["charset-hypothesis"] = int(verdict.hypothesis_met)


@check("regular5-girth", "5-regular graphs have a(Γ) = girth")
def _regular5(ctx: GraphContext):
    if bounds.regular_exact(ctx.g) != 5:
        return
    girth = ctx.metrics.girth
    a = ctx.value("G", K.DEFENSIVE)
    if girth == ACYCLIC or a != girth:
        yield f"a(Γ)={a} vs girth={girth}"


# --------------------------------------------------------------------------
# runs


@dataclass
class GraphOutcome:
    graph6: str
    n: int
    m: int
    values: dict[str, int]
    checks_passed: list[str]
    skipped: list[str]
    violations: list[dict]

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6, "n": self.n, "m": self.m, "values": self.values,
            "checks_passed": self.checks_passed, "skipped": self.skipped,
        }


def check_graph(g: Graph, cfg: VerifyConfig) -> GraphOutcome:
    ctx = GraphContext(g, cfg)
    names = cfg.checks if cfg.checks is not None else tuple(CHECKS)
    passed, skipped, violations = [], [], []
    for name in names:
        try:
            problems = list(CHECKS[name](ctx))
        except _BudgetSkip as exc:
            skipped.append(f"{name}: {exc}")
            continue
        if problems:
            violations.extend({"graph6": ctx.g6, "check": name, "details": p} for p in problems)
        else:
            passed.append(name)
    values = {k: ctx.values[k] for k in sorted(ctx.values)}
    return GraphOutcome(ctx.g6, g.n, g.m, values, passed, skipped, violations)


def _check_g6(args: tuple[str, VerifyConfig]) -> GraphOutcome:
    g6, cfg = args
    return check_graph(parse_graph6(g6), cfg)


def load_corpus(cfg: VerifyConfig) -> list[Graph]:
    if cfg.family is not None:
        return [generate(cfg.family)]
    if cfg.corpus_files:
        graphs: list[Graph] = []
        for name in cfg.corpus_files:
            graphs.extend(read_graph6_lines(Path(name).read_text(encoding="ascii")))
        return graphs
    return connected_upto(cfg.max_n, cfg.min_n)


def _tightness(outcomes: list[GraphOutcome]) -> dict[str, list[str]]:
    """Corpus graphs on which the global lower bounds are attained."""
    found: dict[str, list[str]] = {"global-sqrt-bound": [], "diameter-bound(Γ)": [], "diameter-bound(L)": []}
    for out in outcomes:
        g = parse_graph6(out.graph6)
        v = out.values
        if g.m > 6 and "γ_a(L)" in v and v["γ_a(L)"] == bounds.global_sqrt_bound(g):
            found["global-sqrt-bound"].append(out.graph6)
        if "γ_ca(Γ)" in v and g.n >= 2:
            lo_g, lo_l = bounds.connected_global_bounds(g)
            if v["γ_ca(Γ)"] == lo_g:
                found["diameter-bound(Γ)"].append(out.graph6)
            if "γ_ca(L)" in v and v["γ_ca(L)"] == lo_l:
                found["diameter-bound(L)"].append(out.graph6)
    return {k: sorted(vs) for k, vs in found.items()}


def run_verification(cfg: VerifyConfig) -> dict:
    unknown = [c for c in (cfg.checks or ()) if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}")
    graphs = load_corpus(cfg)
    jobs = [(encode_graph6(g), cfg) for g in graphs]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(_check_g6, jobs, chunksize=8))
    else:
        outcomes = [_check_g6(j) for j in jobs]
    outcomes.sort(key=lambda o: (o.n, o.graph6))
    violations = [v for o in outcomes for v in o.violations]
    names = list(cfg.checks) if cfg.checks is not None else list(CHECKS)
    by_check = {
        name: {
            "passed": sum(name in o.checks_passed for o in outcomes),
            "violations": sum(v["check"] == name for v in violations),
        }
        for name in names
    }
    return {
        "corpus": cfg.corpus_descriptor(),
        "checks": [{"id": n, "description": DESCRIPTIONS[n]} for n in names],
        "graphs": [o.to_json() for o in outcomes],
        "violations": violations,
        "tightness": _tightness(outcomes),
        "summary": {
            "graphs": len(outcomes),
            "violations": len(violations),
            "skipped": sum(len(o.skipped) for o in outcomes),
            "by_check": by_check,
        },
        "ok": not violations,
    }


def star_erratum_report(leaves: Iterable[int] = (3, 4, 5)) -> dict:
    """Exact a(L(K_{1,n})), â(L(K_{1,n})) next to the closed forms and the value n-1."""
    rows = []
    for n in leaves:
        g = star_graph(n)
        lg = line_graph(g).graph
        a = brute_force_oracle(lg, K.DEFENSIVE).value
        s = brute_force_oracle(lg, K.STRONG).value
        rows.append({
            "graph": f"K_{{1,{n}}}",
            "graph6": encode_graph6(g),
            "a(L)": a,
            "â(L)": s,
            "semiregular closed form": list(bounds.semiregular_exact(g)),
            "value n-1": n - 1,
            "n-1 holds": a == n - 1,
        })
    return {
        "check": "star-erratum",
        "note": "a(L(K_{1,n})) = n-1 does not hold in general; "
                "exact values follow ceil(n/2) and ceil((n+1)/2)",
        "rows": rows,
        "closed forms hold": all(
            [r["a(L)"], r["â(L)"]] == r["semiregular closed form"] for r in rows
        ),
    }
