"""Alliance predicates: the semantic ground truth for everything else.

A nonempty set ``S`` is a defensive alliance when every ``v`` in ``S``
satisfies ``2|N_S(v)| + 1 >= deg(v)``, and a strong one when
``2|N_S(v)| >= deg(v)``.  Global variants must also dominate the graph, and
global-connected variants must additionally induce a connected subgraph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Graph, GraphError, bits, components, is_connected_set, to_mask
from .subsets import connected_subsets_of_size

SUBSET_TEST_THRESHOLD = 12
GLOBAL_MINIMALITY_CAP = 16
TABLE_CAP = 22


class AllianceKind(enum.Enum):
    DEFENSIVE = "defensive"
    STRONG = "strong"
    GLOBAL_DEFENSIVE = "global-defensive"
    GLOBAL_STRONG = "global-strong"
    GLOBAL_CONNECTED_DEFENSIVE = "global-connected-defensive"
    GLOBAL_CONNECTED_STRONG = "global-connected-strong"

    @property
    def strong(self) -> bool:
        return self in (AllianceKind.STRONG, AllianceKind.GLOBAL_STRONG,
                        AllianceKind.GLOBAL_CONNECTED_STRONG)

    @property
    def is_global(self) -> bool:
        return self not in (AllianceKind.DEFENSIVE, AllianceKind.STRONG)

    @property
    def connected(self) -> bool:
        return self in (AllianceKind.GLOBAL_CONNECTED_DEFENSIVE,
                        AllianceKind.GLOBAL_CONNECTED_STRONG)

    @property
    def symbol(self) -> str:
        return {
            "defensive": "a", "strong": "â",
            "global-defensive": "γ_a", "global-strong": "γ_â",
            "global-connected-defensive": "γ_ca", "global-connected-strong": "γ_câ",
        }[self.value]

    def need(self, degree: int) -> int:
        """Fewest neighbours inside the set a member of this degree requires."""
        return (degree + 1) // 2 if self.strong else degree // 2

    @classmethod
    def parse(cls, text: str) -> "AllianceKind":
        try:
            return cls(text)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown alliance kind {text!r}; choose from {choices}") from None


ALL_KINDS = tuple(AllianceKind)
LOCAL_KINDS = (AllianceKind.DEFENSIVE, AllianceKind.STRONG)


@dataclass(frozen=True)
class BoundaryCount:
    inside: int
    outside: int


def _as_mask(g: Graph, s: Iterable[int] | int) -> int:
    if isinstance(s, int):
        if s & ~g.full_mask:
            raise GraphError("vertex set has ids outside the graph")
        return s
    vs = list(s)
    for v in vs:
        g._check_vertex(v)
    return to_mask(vs)


def boundary_counts(g: Graph, s: Iterable[int] | int, v: int) -> BoundaryCount:
    g._check_vertex(v)
    mask = _as_mask(g, s)
    inside = (g.adj[v] & mask).bit_count()
    return BoundaryCount(inside=inside, outside=g.degrees[v] - inside)


def alliance_mask_ok(g: Graph, mask: int, kind: AllianceKind) -> bool:
    """:func:`is_alliance` on a nonempty, already-validated bitmask."""
    adj, deg = g.adj, g.degrees
    strong = kind.strong
    for v in bits(mask):
        twice = 2 * (adj[v] & mask).bit_count()
        if (twice if strong else twice + 1) < deg[v]:
            return False
    if kind.is_global:
        dominated = mask
        for v in bits(mask):
            dominated |= adj[v]
        if dominated != g.full_mask:
            return False
        if kind.connected and not is_connected_set(g, mask):
            return False
    return True


def is_alliance(g: Graph, s: Iterable[int] | int, kind: AllianceKind) -> bool:
    mask = _as_mask(g, s)
    if not mask:
        raise GraphError("an alliance must be a nonempty vertex set")
    return alliance_mask_ok(g, mask, kind)


def is_minimal_alliance(g: Graph, s: Iterable[int] | int, kind: AllianceKind) -> bool | None:
    """Whether no nonempty proper subset of ``s`` is an alliance of ``kind``.

    Returns ``None`` (unverified) for global kinds when ``|s|`` exceeds
    :data:`GLOBAL_MINIMALITY_CAP`.
    """
    mask = _as_mask(g, s)
    if not mask or not alliance_mask_ok(g, mask, kind):
        raise GraphError("minimality is only defined for alliances of the given kind")
    size = mask.bit_count()
    if size == 1:
        return True
    if kind.is_global:
        if size > GLOBAL_MINIMALITY_CAP:
            return None
        return not _any_proper_subset(g, mask, kind)
    if size <= SUBSET_TEST_THRESHOLD:
        return not _any_proper_subset(g, mask, kind)
    # a disconnected local alliance has alliance components, and any
    # sub-alliance contains a connected one
    if len(components(g, mask)) > 1:
        return False
    return not any(
        alliance_mask_ok(g, sub, kind)
        for k in range(1, size)
        for sub in connected_subsets_of_size(g, k, mask)
    )


def _any_proper_subset(g: Graph, mask: int, kind: AllianceKind) -> bool:
    members = list(bits(mask))
    for k in range(1, len(members)):
        for combo in combinations(members, k):
            if alliance_mask_ok(g, to_mask(combo), kind):
                return True
    return False


def alliance_table(g: Graph, kind: AllianceKind) -> np.ndarray:
    """Boolean array over all ``2**n`` bitmasks: entry ``S`` is ``is_alliance(S)``.

    Vectorised evaluation of the same predicate, used by the brute-force
    oracle.  Entry 0 (the empty set) is always ``False``.
    """
    n = g.n
    if n > TABLE_CAP:
        raise GraphError(f"alliance table limited to n <= {TABLE_CAP}, got {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    ok = masks != 0
    strong = kind.strong
    for v in range(n):
        member = (masks >> v) & 1 == 1
        inside = np.bitwise_count(masks & g.adj[v]).astype(np.int64)
        lhs = 2 * inside if strong else 2 * inside + 1
        ok &= ~member | (lhs >= g.degrees[v])
        if kind.is_global:
            ok &= member | (inside > 0)
    if kind.connected:
        idx = np.flatnonzero(ok)
        sub = masks[idx]
        reach = sub & -sub
        while True:
            grow = reach.copy()
            for v in range(n):
                grow |= np.where((reach >> v) & 1 == 1, g.adj[v], 0)
            grow &= sub
            if np.array_equal(grow, reach):
                break
            reach = grow
        ok[idx[reach != sub]] = False
    return ok
