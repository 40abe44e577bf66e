"""Command-line interface.

Subcommands: ``solve`` (single seeded run), ``bench`` (experiment from a TOML
file), ``compare`` (baseline vs challenger from an aggregate.json), ``exact``
(brute-force optimum for tiny instances). Exit codes: 0 success, 2
configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import bench
from .engine import GaConfig, run_ga
from .errors import ConfigError, TsplibParseError
from .exact import brute_force_optimum
from .hrx import run_cxga
from .tsplib import parse_instance_file

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cxga",
        description="Genetic-algorithm toolkit for the Euclidean TSP "
                    "(MSCX / MSCX_Radius / RX crossovers and the CXGA loop)")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run one algorithm once on one instance")
    solve.add_argument("instance", help="TSPLIB file (EUC_2D)")
    solve.add_argument("--algo", default="GA3",
                       help="GA1, GA2, GA3 or CXGA (default: GA3)")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--budget", type=int, default=1_000_000,
                       help="cost-evaluation budget (default: 1000000)")
    solve.add_argument("--ps", type=int, default=100, help="population size")
    solve.add_argument("--pc", type=float, default=0.9, help="crossover rate")
    solve.add_argument("--pm", type=float, default=None,
                       help="mutation rate (default: 1/n)")
    solve.add_argument("--tour", action="store_true",
                       help="also print the best tour found")

    run_bench = sub.add_parser("bench", help="run an experiment from a TOML spec")
    run_bench.add_argument("spec", help="experiment description (TOML)")
    run_bench.add_argument("--budget", type=int, default=None,
                           help="override the spec's evaluation budget")
    run_bench.add_argument("--repeats", type=int, default=None,
                           help="override the spec's repeat count")
    run_bench.add_argument("--jobs", type=int, default=None,
                           help="parallel worker processes (default: all cores)")
    run_bench.add_argument("--output-dir", default=None,
                           help="override the spec's output directory")

    comp = sub.add_parser("compare",
                          help="percentage deltas between two algorithms")
    comp.add_argument("report", help="aggregate.json written by bench")
    comp.add_argument("--baseline", default="GA3")
    comp.add_argument("--challenger", default="CXGA")

    exact = sub.add_parser("exact", help="brute-force optimum (n <= 11)")
    exact.add_argument("instance", help="TSPLIB file (EUC_2D)")
    return parser


def _cmd_solve(args) -> int:
    instance = parse_instance_file(args.instance)
    algo = bench.preset(args.algo)
    ga = GaConfig(ps=args.ps, pc=args.pc, pm=args.pm, budget=args.budget,
                  crossover=algo.crossover, seed=args.seed)
    if algo.hrx is not None:
        report = run_cxga(instance, ga, algo.hrx)
    else:
        report = run_ga(instance, ga)
    print(f"instance   : {instance.name} (n={instance.n})")
    print(f"algorithm  : {algo.name}")
    print(f"seed       : {report.seed}")
    print(f"best cost  : {report.best_cost:g}")
    print(f"evaluations: {report.evaluations_used}")
    print(f"wall time  : {report.wall_time:.2f}s")
    if args.tour:
        print("best tour  :", " ".join(str(c) for c in report.best_tour))
    return EXIT_OK


def _cmd_bench(args) -> int:
    spec = bench.load_spec(args.spec)
    overrides = {}
    if args.budget is not None:
        overrides["budget"] = args.budget
    if args.repeats is not None:
        overrides["repeats"] = args.repeats
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.output_dir is not None:
        overrides["output_dir"] = args.output_dir
    if overrides:
        import dataclasses
        spec = dataclasses.replace(spec, **overrides)
    bench.run_experiment(spec)
    return EXIT_OK


def _cmd_compare(args) -> int:
    report = bench.read_report(args.report)
    deltas = bench.compare(report, args.baseline, args.challenger)
    print(f"{'instance':<12} {'mean delta %':>14} {'min delta %':>14}   "
          f"(positive: {args.challenger} better than {args.baseline})")
    for instance, d in deltas.items():
        print(f"{instance:<12} {d['mean_delta_pct']:>14.3f} "
              f"{d['min_delta_pct']:>14.3f}")
    return EXIT_OK


def _cmd_exact(args) -> int:
    instance = parse_instance_file(args.instance)
    cost, tour = brute_force_optimum(instance)
    print(f"instance: {instance.name} (n={instance.n})")
    print(f"optimum : {cost:g}")
    print("tour    :", " ".join(str(c) for c in tour))
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "bench": _cmd_bench,
    "compare": _cmd_compare,
    "exact": _cmd_exact,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (OSError, TsplibParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
