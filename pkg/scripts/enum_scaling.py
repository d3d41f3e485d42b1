"""Time tree enumeration of R_b(n) for doubling n and report cost per partition."""
import argparse
import time

from bary.tree import iter_partitions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--base", type=int, default=2)
    ap.add_argument("--ns", type=int, nargs="+", default=[40, 80, 160, 320])
    args = ap.parse_args()

    print(f"{'n':>6} {'|R_b(n)|':>10} {'seconds':>9} {'us/item':>8}")
    for n in args.ns:
        start = time.perf_counter()
        k = sum(1 for _ in iter_partitions(n, args.base))
        dt = time.perf_counter() - start
        print(f"{n:>6} {k:>10} {dt:>9.3f} {dt / k * 1e6:>8.3f}")


if __name__ == "__main__":
    main()
