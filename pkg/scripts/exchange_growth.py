"""Exchange-graph growth by depth, optionally saved as JSON or DOT."""
import argparse
from collections import Counter

from tubular import exchange


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--height", type=int, default=exchange.DEFAULT_SEARCH_HEIGHT)
    ap.add_argument("--save", default=None, help="path ending in .json or .dot")
    args = ap.parse_args()

    g = exchange.explore(args.depth, args.height)
    per_depth = Counter(g.depths)
    total = 0
    for d in range(args.depth + 1):
        total += per_depth[d]
        print(f"depth {d}: {per_depth[d]:>5} new clusters, {total:>6} total")
    top = max(r.q.height for s in g.seeds for r in s.positions)
    print(f"{len(g.edges)} edges, {g.revisits} revisits, largest slope height {top}")
    if args.save:
        fmt = "dot" if args.save.endswith(".dot") else "json"
        exchange.export_graph(g, fmt, args.save)
        print(f"saved {args.save}")


if __name__ == "__main__":
    main()
