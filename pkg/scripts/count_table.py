"""Print |R_b(n)| by three formulas, plus the length profile, for a range of n."""
import argparse

from bary.counting import CountCache, count, count_sum_form, count_via_pi, exact_parts_profile


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--base", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--step", type=int, default=1)
    args = ap.parse_args()

    cache = CountCache(args.base)
    print(f"{'n':>6} {'count':>14} {'agree':>6}  parts-by-length")
    for n in range(0, args.max_n + 1, args.step):
        c = count(n, args.base, cache)
        agree = c == count_sum_form(n, args.base, cache) == count_via_pi(n, args.base, cache)
        prof = exact_parts_profile(n, args.base, cache)
        print(f"{n:>6} {c:>14} {str(agree):>6}  {prof}")


if __name__ == "__main__":
    main()
