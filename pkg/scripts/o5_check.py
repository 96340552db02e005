"""Alliance numbers of the odd graph O_5 and its line graph.

    python scripts/o5_check.py [--k 5] [--max-size 6]

Counts every connected vertex set up to --max-size in O_k and in L(O_k),
reports how many are defensive alliances at each size, and prints the
solver's exact values with the witnesses.
"""

import argparse
import json
import time
from collections import Counter

from linealliance.graph import induced_subgraph, metrics, odd_graph, to_mask
from linealliance.kernel import AllianceKind, alliance_mask_ok, is_alliance
from linealliance.linegraph import line_graph
from linealliance.solver import enumerate_connected_subsets, line_alliance_number, min_alliance


def scan(g, max_size):
    seen, hits = Counter(), Counter()
    for s in enumerate_connected_subsets(g, max_size):
        seen[len(s)] += 1
        if alliance_mask_ok(g, to_mask(s), AllianceKind.DEFENSIVE):
            hits[len(s)] += 1
    return {size: {"connected": seen[size], "defensive": hits[size]} for size in sorted(seen)}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--line-max-size", type=int, default=4)
    args = ap.parse_args()

    t0 = time.perf_counter()
    g = odd_graph(args.k)
    lg = line_graph(g)
    star = [lg.line_vertex(0, u) for u in g.neighbors(0)]
    res_g = min_alliance(g, AllianceKind.DEFENSIVE)
    cyc, _ = induced_subgraph(g, res_g.witness)
    out = {
        "graph": {"n": g.n, "m": g.m, "girth": metrics(g).girth, "scan": scan(g, args.max_size),
                  "a": res_g.value, "witness": list(res_g.witness),
                  "witness_degrees": sorted(cyc.degrees)},
        "line": {"n": lg.graph.n, "m": lg.graph.m, "scan": scan(lg.graph, args.line_max_size),
                 "star_is_strong_alliance": is_alliance(lg.graph, star, AllianceKind.STRONG),
                 "a": line_alliance_number(g, AllianceKind.DEFENSIVE).value,
                 "strong": line_alliance_number(g, AllianceKind.STRONG).value},
    }
    out["seconds"] = round(time.perf_counter() - t0, 2)
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
