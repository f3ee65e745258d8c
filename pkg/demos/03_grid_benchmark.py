"""Scaled-down hyperparameter grid run with a readable summary.

Runs the same sweep as `slick-bench grid` but at a tenth of the desk scale
so it finishes in a few seconds, prints per-config occupancy and timing,
and writes the CSV that the plot generator consumes.
"""

import sys

from slickhash import BenchPlan, run_grid, write_csv


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "grid_demo.csv"
    plan = BenchPlan(capacity=10_000, n_ops=10_000, repetitions=1)
    records = run_grid(plan)
    write_csv(records, out)

    print(f"{'impl':14s} {'config':14s} {'phase':7s} {'ns/op':>9s} {'backyard':>9s}")
    for r in sorted(records, key=lambda r: (r.impl_name, r.config_label, r.phase)):
        backyard = "" if r.backyard_len is None else str(r.backyard_len)
        print(
            f"{r.impl_name:14s} {r.config_label:14s} {r.phase:7s} "
            f"{r.ns_per_op:9.0f} {backyard:>9s}"
        )
    print(f"\nwrote {len(records)} records to {out}")
    print("render with: plotgen --csv", out, "--figure configs --metric ns_per_op --out grid.svg")


if __name__ == "__main__":
    main()
