"""Rebuild the diagram of R_2(80) both ways and write it as DOT and JSON.

    python scripts/figure5.py --out-dir out/
"""
import argparse
import pathlib
import time

from bary.export import diagram_to_dot, diagram_to_json
from bary.lattice import build_hasse, grow_hasse


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--base", type=int, default=2)
    ap.add_argument("--n", type=int, default=80)
    ap.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("out"))
    args = ap.parse_args()

    t0 = time.perf_counter()
    direct = build_hasse(args.n, args.base)
    t1 = time.perf_counter()
    grown = grow_hasse(args.n, args.base)
    t2 = time.perf_counter()

    print(f"R_{args.base}({args.n}): {len(direct.nodes)} elements, {len(direct.edges)} edges")
    print(f"direct build {t1 - t0:.3f}s, incremental from R_{args.base}(0) {t2 - t1:.3f}s")
    print("identical:", direct == grown)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    stem = args.out_dir / f"R{args.base}_{args.n}"
    stem.with_suffix(".dot").write_text(diagram_to_dot(direct))
    stem.with_suffix(".json").write_text(diagram_to_json(direct))
    print("wrote", stem.with_suffix(".dot"), "and", stem.with_suffix(".json"))


if __name__ == "__main__":
    main()
