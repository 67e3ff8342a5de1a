"""Run the (n, a) grid: discriminant, oracle and index checks for every valid field.

    python scripts/grid_sweep.py --n-max 12 --a-max 500 [--csv out.csv]
"""

import argparse
import collections
import csv
import time

from purefield.sweep import GridConfig, check_field, iter_grid_fields


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--a-max", type=int, default=500)
    ap.add_argument("--positive-only", action="store_true")
    ap.add_argument("--csv")
    args = ap.parse_args()
    cfg = GridConfig(n_min=args.n_min, n_max=args.n_max, a_max=args.a_max,
                     negative=not args.positive_only)

    t0 = time.perf_counter()
    rows = [check_field(f) for f in iter_grid_fields(cfg)]
    dt = time.perf_counter() - t0

    per_n = collections.Counter(r.n for r in rows)
    branches = collections.Counter((r.n, r.branch) for r in rows)
    bad = [r for r in rows if not (r.oracle and r.disc_match and r.index_identity)]
    print(f"{cfg}")
    print(f"{len(rows)} fields in {dt:.1f}s, {len(bad)} failures")
    for n in sorted(per_n):
        print(f"  n={n:2d}: {per_n[n]:4d} fields, S nonempty in {branches[n, 'S-nonempty']:4d}")
    for r in bad[:20]:
        print("  FAIL", r)

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "a", "branch", "oracle", "disc_match", "index", "d_K"])
            for r in rows:
                w.writerow([r.n, r.a, r.branch, r.oracle, r.disc_match, r.index, r.d_K])


if __name__ == "__main__":
    main()
