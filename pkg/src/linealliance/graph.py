"""Simple undirected graphs over dense 0-based vertex ids.

Adjacency is stored as one integer bitmask per vertex, which keeps subset
operations in the solver cheap.  Besides the :class:`Graph` type this module
holds the graph6 / edge-list readers and writers, deterministic family
generators and the structural metrics (components, diameter, girth).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INFINITE = "infinite"
ACYCLIC = "acyclic"


class GraphError(ValueError):
    """Invalid graph construction or query."""


class ParseError(GraphError):
    """Malformed graph6 or edge-list input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``."""

    __slots__ = ("n", "adj", "m", "degrees", "_edges")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = tuple(adj)
        self.degrees = tuple(row.bit_count() for row in self.adj)
        self.m = sum(self.degrees) // 2
        self._edges: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} not in 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted non-increasingly (``δ1 ≥ δ2 ≥ … ≥ δn``)."""
    return sorted(g.degrees, reverse=True)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the relabelled graph together with the original id of every new
    vertex (new id ``i`` corresponds to ``labels[i]``; labels are sorted).
    """
    labels = sorted(set(vertices))
    if not labels:
        raise GraphError("induced subgraph of the empty set is not defined")
    for v in labels:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(labels)}
    keep = to_mask(labels)
    adj = [to_mask(index[u] for u in bits(g.adj[v] & keep)) for v in labels]
    return Graph(len(labels), adj), labels


# --------------------------------------------------------------------------
# graph6


def _n_header(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    out = [_n_header(g.n)]
    chunk = 0
    filled = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            chunk = (chunk << 1) | (row >> u & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 record (an optional ``>>graph6<<`` header is allowed)."""
    record = text.strip()
    offset = 0
    if record.startswith(">>graph6<<"):
        offset = len(">>graph6<<")
    if offset >= len(record):
        raise ParseError("empty graph6 record")
    for i in range(offset, len(record)):
        if not 63 <= ord(record[i]) <= 126:
            raise ParseError(f"byte {i}: character {record[i]!r} outside graph6 range 63..126")

    def _read(start: int, count: int) -> int:
        if start + count > len(record):
            raise ParseError(f"byte {start}: truncated vertex count")
        value = 0
        for ch in record[start:start + count]:
            value = (value << 6) | (ord(ch) - 63)
        return value

    if record[offset] != "~":
        n, pos = ord(record[offset]) - 63, offset + 1
    elif offset + 1 < len(record) and record[offset + 1] == "~":
        n, pos = _read(offset + 2, 6), offset + 8
    else:
        n, pos = _read(offset + 1, 3), offset + 4
        if n < 63:
            raise ParseError(f"byte {offset}: long-form length used for n={n}")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    payload = record[pos:]
    if len(payload) != expected:
        raise ParseError(
            f"byte {pos}: expected {expected} payload bytes for n={n}, found {len(payload)}"
        )
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(payload[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    if nbits % 6:
        last = ord(payload[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise ParseError(f"byte {len(record) - 1}: nonzero padding bits")
    return Graph(n, adj)


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a multi-record .g6 corpus (one record per non-blank line)."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return graphs


# --------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> Graph:
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared is not None or edges:
                raise ParseError(f"line {lineno}: 'n' header must come first")
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected 'n <count>'")
            declared = _int_token(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = _int_token(tokens[0], lineno), _int_token(tokens[1], lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    top = max((v for e in edges for v in e), default=-1) + 1
    n = top if declared is None else declared
    if n < top:
        raise ParseError(f"declared n={declared} but edge uses vertex {top - 1}")
    return Graph.from_edges(n, edges)


def _int_token(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token {token!r}") from None
    if value < 0:
        raise ParseError(f"line {lineno}: negative vertex id {value}")
    return value


def encode_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# families

FAMILIES = (
    "path", "cycle", "complete", "complete-bipartite", "star",
    "kneser", "odd-graph", "petersen", "hypercube",
)


@dataclass(frozen=True)
class GraphFamily:
    """A named graph family plus its integer parameters.

    Labelings: path/cycle vertices in path/cyclic order; complete-bipartite
    puts the ``a`` side first; star has hub 0; kneser(n, k) vertices are the
    k-subsets of ``range(n)`` in lexicographic order, adjacent when disjoint;
    odd-graph(k) is kneser(2k-1, k-1); petersen is odd-graph(3); hypercube(d)
    vertices are d-bit words, adjacent at Hamming distance one.
    """

    tag: str
    params: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return f"{self.tag}({', '.join(map(str, self.params))})"


def generate(family: GraphFamily) -> Graph:
    tag, p = family.tag, family.params
    builders = {
        "path": (1, path_graph),
        "cycle": (1, cycle_graph),
        "complete": (1, complete_graph),
        "complete-bipartite": (2, complete_bipartite_graph),
        "star": (1, star_graph),
        "kneser": (2, kneser_graph),
        "odd-graph": (1, odd_graph),
        "petersen": (0, petersen_graph),
        "hypercube": (1, hypercube_graph),
    }
    if tag not in builders:
        raise GraphError(f"unknown family {tag!r}; choose from {', '.join(FAMILIES)}")
    arity, build = builders[tag]
    if len(p) != arity:
        raise GraphError(f"family {tag} takes {arity} parameter(s), got {len(p)}")
    return build(*p)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(n: int) -> Graph:
    """K_{1,n} with hub 0 and leaves 1..n."""
    if n < 1:
        raise GraphError("star needs n >= 1 leaves")
    return complete_bipartite_graph(1, n)


def kneser_graph(n: int, k: int) -> Graph:
    if k < 1 or n < 2 * k:
        raise GraphError("kneser(n, k) needs k >= 1 and n >= 2k")
    subsets = [to_mask(c) for c in combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def odd_graph(k: int) -> Graph:
    if k < 2:
        raise GraphError("odd graph O_k needs k >= 2")
    return kneser_graph(2 * k - 1, k - 1)


def petersen_graph() -> Graph:
    return odd_graph(3)


def hypercube_graph(d: int) -> Graph:
    if d < 1:
        raise GraphError("hypercube needs dimension >= 1")
    n = 1 << d
    return Graph.from_edges(n, ((x, x ^ (1 << i)) for x in range(n) for i in range(d) if x < x ^ (1 << i)))


# --------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class Metrics:
    connected: bool
    components: tuple[tuple[int, ...], ...]
    diameter: int | str
    component_diameters: tuple[int, ...]
    girth: int | str


def bfs_distances(g: Graph, source: int, within: int | None = None) -> dict[int, int]:
    allowed = g.full_mask if within is None else within
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & allowed):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def components(g: Graph, within: int | None = None) -> list[tuple[int, ...]]:
    """Connected components (of the subgraph induced by ``within``), ordered by least vertex."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        reach = closure(g, 1 << start, remaining)
        comps.append(tuple(bits(reach)))
        remaining &= ~reach
    return comps


def closure(g: Graph, seed: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``seed`` inside ``within``."""
    reach = seed & within
    frontier = reach
    adj = g.adj
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & within & ~reach
        reach |= frontier
    return reach


def is_connected_set(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    low = mask & -mask
    return closure(g, low, mask) == mask


def girth(g: Graph) -> int | str:
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] >= best:
                break
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


def metrics(g: Graph) -> Metrics:
    comps = components(g)
    diams = []
    for comp in comps:
        mask = to_mask(comp)
        diams.append(max(max(bfs_distances(g, v, mask).values()) for v in comp))
    connected = len(comps) <= 1
    if connected:
        diameter: int | str = diams[0] if diams else 0
    else:
        diameter = INFINITE
    return Metrics(
        connected=connected,
        components=tuple(comps),
        diameter=diameter,
        component_diameters=tuple(diams),
        girth=girth(g),
    )
