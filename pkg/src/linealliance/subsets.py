"""Connected vertex-subset enumeration (ESU-style, bitmask based)."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph


def connected_subsets_of_size(g: Graph, k: int, allowed: int | None = None) -> Iterator[int]:
    """Yield every connected ``k``-subset of ``allowed`` exactly once, as a bitmask.

    Each subset is produced from its least vertex; extension candidates are
    consumed lowest-id first, so the order is deterministic.
    """
    if k < 1:
        return
    adj = g.adj
    allowed = g.full_mask if allowed is None else allowed & g.full_mask
    root_mask = allowed
    while root_mask:
        low = root_mask & -root_mask
        root_mask ^= low
        v = low.bit_length() - 1
        above = allowed & ~((low << 1) - 1)
        if k == 1:
            yield low
            continue
        yield from _extend(adj, low, adj[v] & above, low | adj[v], above, k - 1)


def _extend(adj, sub: int, ext: int, closed: int, above: int, left: int) -> Iterator[int]:
    # closed = sub together with all its neighbours
    while ext:
        low = ext & -ext
        ext ^= low
        new_sub = sub | low
        if left == 1:
            yield new_sub
            continue
        w = low.bit_length() - 1
        fresh = adj[w] & above & ~closed
        yield from _extend(adj, new_sub, ext | fresh, closed | adj[w], above, left - 1)
