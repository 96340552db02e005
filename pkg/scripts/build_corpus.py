"""Regenerate the vendored connected-graph corpora (n <= 7) from the networkx atlas.

    python scripts/build_corpus.py

Writes src/linealliance/data/connected_n{1..7}.g6, one graph6 record per
line, sorted.  Expected counts (connected unlabelled graphs): 1 1 2 6 21 112 853.
"""

from pathlib import Path

import networkx as nx

from linealliance.graph import Graph, encode_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "linealliance" / "data"


def main() -> None:
    by_order: dict[int, list[str]] = {n: [] for n in range(1, 8)}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or not nx.is_connected(h):
            continue
        g = Graph.from_edges(n, h.edges())
        by_order[n].append(encode_graph6(g))
    for n, records in by_order.items():
        path = DATA / f"connected_n{n}.g6"
        path.write_text("".join(r + "\n" for r in sorted(records)), encoding="ascii")
        print(path.name, len(records))


if __name__ == "__main__":
    main()
