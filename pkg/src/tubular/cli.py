"""Command-line entry point: ``tubular <command> ...``.

Exit codes: 0 success (including negative verdicts), 1 a failed selftest,
2 usage error, 3 search bound exhausted, 4 internal invariant violated.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import acceptance, arcs, exchange, lattice, quiver, roots, slopes

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND, EXIT_INVARIANT = 0, 1, 2, 3, 4
ENV_HEIGHT = "TUBULAR_MAX_HEIGHT"


class UsageError(Exception):
    pass


def _default_height() -> int:
    raw = os.environ.get(ENV_HEIGHT)
    if raw is None:
        return exchange.DEFAULT_SEARCH_HEIGHT
    try:
        h = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_HEIGHT} must be an integer, got {raw!r}")
    if h < 1:
        raise UsageError(f"{ENV_HEIGHT} must be positive")
    return h


def cmd_classify(args) -> int:
    v = lattice.parse_vector(args.vector)
    r = roots.recognize(v)
    if r is not None:
        print(f"real Schur root {r}")
    elif roots.is_isotropic_schur(v):
        print(f"isotropic Schur root h_{lattice.slope_of(v)}")
    else:
        print("neither")
    return EXIT_OK


def _compat_rule(a: roots.RootIndex, b: roots.RootIndex) -> str:
    if a.q == b.q:
        return "same slope, x = -y" if a.x == -b.x else "same slope, x != -y"
    hi, lo = (a, b) if b.q < a.q else (b, a)
    d = slopes.dist(a.q, b.q)
    val = lattice.euler(roots.vector_of(hi), roots.vector_of(lo))
    return f"dist {d}, <v_{hi}, v_{lo}> = {val}"


def cmd_compat(args) -> int:
    a, b = roots.parse_root_index(args.first), roots.parse_root_index(args.second)
    verdict = "compatible" if roots.compatible(a, b) else "incompatible"
    print(f"{verdict} ({_compat_rule(a, b)})")
    return EXIT_OK


def cmd_roots(args) -> int:
    rs = roots.enumerate_schur(args.max_height)
    if args.format == "json":
        doc = {
            "schema": "tubular.roots/1",
            "max_height": args.max_height,
            "roots": [{"index": str(r), "vector": list(roots.vector_of(r))} for r in rs],
        }
        print(json.dumps(doc, ensure_ascii=False))
    else:
        for r in rs:
            print(f"{r}\t{lattice.format_vector(roots.vector_of(r))}")
    return EXIT_OK


def _parse_arc(text: str):
    try:
        return arcs.parse_arc(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_arc_render(args) -> int:
    p = slopes.parse_slope(args.slope)
    if args.label in ("+", "-"):
        d = arcs.render(p, args.label)
    else:
        d = arcs.render_tagged(arcs.TaggedArc(p, roots.parse_unit(args.label)))
    try:
        arcs.svg_export([d], args.output)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}")
    print(f"wrote {args.output}: {len(d.primitives)} primitives, endpoints {d.ends[0]}-{d.ends[1]}")
    return EXIT_OK


def cmd_arc_intersect(args) -> int:
    a, b = _parse_arc(args.first), _parse_arc(args.second)
    if not (isinstance(a, arcs.UntaggedArc) and isinstance(b, arcs.UntaggedArc)):
        raise UsageError("intersect takes untagged arcs 'p:+' or 'p:-'")
    print(arcs.intersection_number(a.p, a.sign, b.p, b.sign))
    return EXIT_OK


def cmd_quiver_mutate(args) -> int:
    if args.fixture not in quiver.FIXTURES:
        raise UsageError(f"unknown fixture {args.fixture!r}; known: {', '.join(sorted(quiver.FIXTURES))}")
    try:
        ks = [int(k) for k in args.seq.split(",") if k]
    except ValueError:
        raise UsageError(f"bad sequence {args.seq!r}")
    b = quiver.mutate_seq(quiver.FIXTURES[args.fixture], ks, args.order)
    print(quiver.to_dot(b) if args.format == "dot" else quiver.dumps(b), end="")
    return EXIT_OK


def cmd_quiver_verify(args) -> int:
    if args.name == "d4-class":
        cls = quiver.mutation_class(quiver.DELTA_D4)
        has_bt = quiver.canonical_form(quiver.BT_SPHERE) in cls.forms
        ok = cls.finite and has_bt
        print(f"{'OK' if ok else 'FAIL'} (closed={cls.finite}, size={cls.size}, contains bt_sphere={has_bt})")
        return EXIT_OK if ok else EXIT_FAIL
    chk = quiver.verify_sequence(args.name)
    if chk.ok:
        print(f"OK (order={','.join(chk.orders)})")
        return EXIT_OK
    loose = ",".join(chk.orders_up_to_pendants)
    extra = f"; isomorphic after reorienting pendant arrows (order={loose})" if loose else ""
    print(f"FAIL (no order reaches the target{extra})")
    return EXIT_FAIL


def cmd_exchange_explore(args) -> int:
    height = args.height if args.height is not None else _default_height()
    g = exchange.explore(args.depth, height)
    text = exchange.export_graph(g, args.format, args.output)
    if args.output is None:
        print(text, end="")
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = acceptance.run_all(echo=print)
    passed = sum(c.passed for c in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tubular", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="recognize a 6-vector")
    p.add_argument("vector", help="comma-separated coordinates, e.g. 0,0,1,0,1,0")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compat", help="compatibility of two roots q:x")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("roots", help="list real Schur roots by slope height")
    p.add_argument("--max-height", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_roots)

    arc = sub.add_parser("arc", help="arcs on the four-punctured sphere").add_subparsers(dest="arc_cmd", required=True)
    p = arc.add_parser("render", help="draw one arc as SVG")
    p.add_argument("slope")
    p.add_argument("label", help="+ or - for untagged arcs, or a unit for tagged ones; "
                   "put negative units after --, e.g. 'render 7/4 -o a.svg -- -k'")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_arc_render)
    p = arc.add_parser("intersect", help="intersection number of two untagged arcs")
    p.add_argument("first", help="p:+ or p:-")
    p.add_argument("second")
    p.set_defaults(func=cmd_arc_intersect)

    qv = sub.add_parser("quiver", help="exchange matrices").add_subparsers(dest="quiver_cmd", required=True)
    p = qv.add_parser("mutate", help="mutate a fixture")
    p.add_argument("--fixture", required=True)
    p.add_argument("--seq", required=True, help="comma-separated 1-based vertices, written left to right")
    p.add_argument("--order", choices=("rl", "lr"), default="rl")
    p.add_argument("--format", choices=("matrix", "dot"), default="matrix")
    p.set_defaults(func=cmd_quiver_mutate)
    p = qv.add_parser("verify", help="check a recorded mutation sequence or the D4 class")
    p.add_argument("name", choices=("e6", "e7", "e8", "d4-class"))
    p.set_defaults(func=cmd_quiver_verify)

    ex = sub.add_parser("exchange", help="exchange graph").add_subparsers(dest="exchange_cmd", required=True)
    p = ex.add_parser("explore", help="breadth-first exploration from the initial seed")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--height", type=int, default=None, help=f"search bound (default ${ENV_HEIGHT} or 64)")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_exchange_explore)

    p = sub.add_parser("selftest", help="run all acceptance criteria")
    p.set_defaults(func=cmd_selftest)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except exchange.BoundedSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (exchange.InvariantError, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
