"""Size of the mutation class of each elliptic fixture, and of the sequence checks."""
import argparse
import time

from tubular import quiver


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--names", nargs="*", default=["delta_d4", "delta_e6", "delta_e7"],
                    help="fixtures to enumerate (delta_e8 takes about a minute)")
    ap.add_argument("--cap", type=int, default=100_000)
    args = ap.parse_args()

    for name in args.names:
        t = time.perf_counter()
        cls = quiver.mutation_class(quiver.FIXTURES[name], args.cap)
        big = max(abs(x) for f in cls.forms for r in f for x in r)
        status = "closed" if cls.finite else f"cap {cls.cap} reached"
        print(f"{name:>14}: {cls.size:>6} classes, max |b_ij| = {big}, {status} ({time.perf_counter() - t:.1f}s)")

    for name in quiver.SEQUENCES:
        chk = quiver.verify_sequence(name)
        print(f"{name}: exact orders {chk.orders or '-'}, up to pendant arrows {chk.orders_up_to_pendants or '-'}")


if __name__ == "__main__":
    main()
