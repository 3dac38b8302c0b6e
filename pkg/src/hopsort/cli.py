"""Command-line harness: dataset -> engine -> counts -> table.

Exit codes: 0 on success, 1 when verification finds a failure, 2 on an
invalid or refused configuration.
"""

from __future__ import annotations

import argparse
import sys

from .bench import (
    DEFAULT_BUDGET,
    ConfigError,
    ExperimentConfig,
    render_model,
    render_per_element_view,
    render_report,
    run_experiment,
    run_model,
    run_verify,
)
from .datasets import DatasetKind
from .engines import MergeEngine

_ENGINES = {
    "baseline": (MergeEngine.BASELINE,),
    "hop": (MergeEngine.HOP,),
    "both": (MergeEngine.BASELINE, MergeEngine.HOP),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopsort",
        description="Comparison-count benchmarks for the hop-link mergesort.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="run a dataset sweep and emit the table")
    bench.add_argument("--dataset", required=True, choices=[k.value for k in DatasetKind])
    bench.add_argument("--k", type=int, default=1024, help="distinct-key bound (default 1024)")
    bench.add_argument("--exp-min", type=int, default=7, help="smallest n as a power of two")
    bench.add_argument("--exp-max", type=int, default=16, help="largest n as a power of two")
    bench.add_argument("--trials", type=int, default=100, help="seeded trials per row")
    bench.add_argument("--seed", type=int, default=1, help="base seed; trial t uses seed+t")
    bench.add_argument("--engine", choices=sorted(_ENGINES), default="both")
    bench.add_argument("--mode", choices=["totals", "per-element"], default="totals")
    bench.add_argument("--format", choices=["tsv", "csv"], default="tsv")
    bench.add_argument("--out", help="write the canonical table to this file")
    bench.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"refuse any row with n*trials above this (default {DEFAULT_BUDGET})",
    )

    verify = sub.add_parser("verify", help="randomized audit of both engines")
    verify.add_argument("--trials", type=int, default=1000)
    verify.add_argument("--max-n", type=int, default=256)
    verify.add_argument("--max-key", type=int, default=16)
    verify.add_argument("--seed", type=int, default=1)

    model = sub.add_parser("model", help="print predicted costs from the closed form")
    model.add_argument("--k", type=int, required=True)
    model.add_argument("--exp-min", type=int, default=7)
    model.add_argument("--exp-max", type=int, default=16)
    model.add_argument("--format", choices=["tsv", "csv"], default="tsv")

    return parser


def _cmd_bench(args: argparse.Namespace) -> int:
    config = ExperimentConfig(
        dataset=DatasetKind(args.dataset),
        exp_min=args.exp_min,
        exp_max=args.exp_max,
        k=args.k,
        trials=args.trials,
        base_seed=args.seed,
        engines=_ENGINES[args.engine],
        budget=args.budget,
    )
    report = run_experiment(config)
    table = render_report(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(table)
    elif args.mode == "per-element":
        sys.stdout.write(render_per_element_view(report, args.format))
    else:
        sys.stdout.write(table)
    for note in report.notes:
        print(note, file=sys.stderr)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    summary = run_verify(args.trials, args.max_n, args.max_key, args.seed)
    print(f"verify: {summary.passed}/{summary.trials} trials passed")
    if summary.ok:
        return 0
    trial, reason = summary.failures[0]
    print(f"first failure: trial {trial} (seed {args.seed + trial}): {reason}")
    print(f"failing trials: {len(summary.failures)}")
    return 1


def _cmd_model(args: argparse.Namespace) -> int:
    rows = run_model(args.k, args.exp_min, args.exp_max)
    sys.stdout.write(render_model(rows, args.format))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_model(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
