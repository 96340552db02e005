"""Bundled exhaustive corpora of connected graphs on 1..7 vertices."""

from __future__ import annotations

from importlib import resources

from .graph import Graph, read_graph6_lines

MAX_BUNDLED_ORDER = 7
# connected unlabelled graphs on n vertices, n = 1..7
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def connected_graphs(n: int) -> list[Graph]:
    if not 1 <= n <= MAX_BUNDLED_ORDER:
        raise FileNotFoundError(f"no bundled corpus for n={n} (available: 1..{MAX_BUNDLED_ORDER})")
    text = resources.files("linealliance.data").joinpath(f"connected_n{n}.g6").read_text("ascii")
    return read_graph6_lines(text)


def connected_upto(max_n: int, min_n: int = 1) -> list[Graph]:
    graphs: list[Graph] = []
    for n in range(min_n, max_n + 1):
        graphs.extend(connected_graphs(n))
    return graphs
