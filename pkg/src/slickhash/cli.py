"""Command-line entry point for the benchmark harness.

`slick-bench bench` measures one configuration; `slick-bench grid` sweeps
the full hyperparameter grid.  CSV goes to --csv or stdout.  Hardware
counters are deliberately not collected in-process; the tool prints a
ready-to-run external profiler command instead.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bench import (
    BASELINES,
    PAPER_CAPACITY,
    PHASES,
    BenchError,
    BenchPlan,
    render_csv,
    run_bench,
    run_grid,
    write_csv,
)
from .table import SlickConfig


def _csv_list(raw: str, allowed: tuple[str, ...], what: str) -> tuple[str, ...]:
    if raw.strip().lower() in ("", "none"):
        return ()
    items = tuple(part.strip() for part in raw.split(",") if part.strip())
    for item in items:
        if item not in allowed:
            raise BenchError(f"unknown {what} {item!r}; choose from {', '.join(allowed)}")
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slick-bench",
        description="Benchmark the sliding-block hash table against platform maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--capacity", type=int, default=100_000, help="table capacity in slots")
        p.add_argument("--ops", type=int, default=None, help="operations per phase (default: capacity)")
        p.add_argument("--seed", type=int, default=0, help="seed for hashing and key generation")
        p.add_argument("--reps", type=int, default=3, help="repetitions per backend")
        p.add_argument(
            "--phases",
            default="insert,query,delete",
            help="comma-separated subset of insert,query,delete",
        )
        p.add_argument(
            "--baselines",
            default="unordered_map,ordered_map",
            help="comma-separated subset of unordered_map,ordered_map, or 'none'",
        )
        p.add_argument("--csv", default=None, metavar="PATH", help="write CSV here instead of stdout")
        p.add_argument(
            "--paper-scale",
            action="store_true",
            help=f"use the full {PAPER_CAPACITY:,}-slot scale, overriding --capacity/--ops",
        )

    bench = sub.add_parser("bench", help="measure a single configuration")
    bench.add_argument("--block-size", type=int, default=10)
    bench.add_argument("--sliding-block-size", type=int, default=None, help="default: 2x block size")
    bench.add_argument("--max-offset", type=int, default=None, help="default: block size")
    bench.add_argument("--max-threshold", type=int, default=None, help="default: block size")
    add_common(bench)

    grid = sub.add_parser("grid", help="sweep the full hyperparameter grid")
    add_common(grid)
    return parser


def _plan_from_args(args: argparse.Namespace, configs: tuple[SlickConfig, ...]) -> BenchPlan:
    capacity = PAPER_CAPACITY if args.paper_scale else args.capacity
    ops = capacity if args.paper_scale or args.ops is None else args.ops
    return BenchPlan(
        capacity=capacity,
        n_ops=ops,
        phases=_csv_list(args.phases, PHASES, "phase"),
        configs=configs,
        baselines=_csv_list(args.baselines, BASELINES, "baseline"),
        seed=args.seed,
        repetitions=args.reps,
    )


def _print_profiler_hint(args: argparse.Namespace) -> None:
    phase = next(iter(_csv_list(args.phases, PHASES, "phase")), "insert")
    rerun = (
        f"slick-bench {args.command} --phases {phase} --reps 1 --baselines none "
        f"--capacity {PAPER_CAPACITY if args.paper_scale else args.capacity} "
        f"--seed {args.seed} --csv /dev/null"
    )
    print(
        "hint: hardware counters are collected externally; for one phase run e.g.\n"
        f"  perf stat -e cache-misses,branch-misses -- {rerun}",
        file=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            capacity = PAPER_CAPACITY if args.paper_scale else args.capacity
            b = args.block_size
            config = SlickConfig(
                block_size=b,
                sliding_block_size=2 * b if args.sliding_block_size is None else args.sliding_block_size,
                max_offset=b if args.max_offset is None else args.max_offset,
                max_threshold=b if args.max_threshold is None else args.max_threshold,
                capacity=capacity,
                seed=args.seed,
            )
            plan = _plan_from_args(args, (config,))
            records = run_bench(plan)
        else:
            plan = _plan_from_args(args, ())
            records = run_grid(plan)
        if args.csv:
            write_csv(records, args.csv)
            print(f"wrote {len(records)} records to {args.csv}", file=sys.stderr)
        else:
            sys.stdout.write(render_csv(records))
        _print_profiler_hint(args)
        return 0
    except (BenchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
