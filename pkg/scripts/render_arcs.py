"""Draw the six base arcs and a few higher ones as SVG files."""
import argparse
from pathlib import Path

from tubular import arcs
from tubular.roots import H
from tubular.slopes import BASE_SLOPES, parse_slope


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures", help="output directory")
    ap.add_argument("--slopes", nargs="*", default=["7/4", "-3/2", "5"],
                    help="extra slopes; each gets both untagged arcs and all tagged versions")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    base = [arcs.render(t, s) for t in BASE_SLOPES for s in arcs.Sign]
    arcs.svg_export(base, out / "base.svg")
    print(f"base.svg: {len(base)} arcs")

    for text in args.slopes:
        p = parse_slope(text)
        stem = text.replace("/", "_").replace("-", "m")
        pair = [arcs.render(p, s) for s in arcs.Sign]
        arcs.svg_export(pair, out / f"arc_{stem}.svg")
        for x in H:
            arcs.svg_export([arcs.render_tagged(arcs.TaggedArc(p, x))], out / f"arc_{stem}_{str(x).replace('-', 'm')}.svg")
        counts = [arcs.crossings(d, b) for d in pair for b in base]
        print(f"arc_{stem}: {sum(len(d.primitives) for d in pair)} primitives, crossings with base {counts}")


if __name__ == "__main__":
    main()
