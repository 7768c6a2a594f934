"""Command-line entry point for the benchmark harness."""

import argparse
import logging
import sys
from pathlib import Path

from acfgm import __version__
from acfgm.errors import ConfigError, DataError, DivergedError, InvalidInputError
from acfgm.harness.config import load_config
from acfgm.harness.runner import any_diverged, prepare, run_experiment
from acfgm.harness.solvers import list_solvers
from acfgm.harness.summary import render_table, summarize, write_summary_csv
from acfgm.harness.trace import export_trace, load_traces
from acfgm.problems.families import get_family, list_families
from acfgm.problems.libsvm import libsvm_dump

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_DIVERGED = 3


def parse_args(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="acfgm",
        description="AC-FGM and first-order baselines on convex composite problems",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Examples:
  acfgm run configs/qp.cfg
  acfgm run configs/lasso.cfg --budget 500 --jobs 4 --set solver.ac.alpha=0.1
  acfgm summarize traces/
  acfgm gen logistic 500 100 3 -o logistic.svm

Problem families: {", ".join(list_families())}
Methods: {", ".join(list_solvers())}
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--trace", action="store_true", help="Enable debug logging of solver internals")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Run an experiment config")
    run.add_argument("config", help="Path to the experiment config file")
    run.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="Override a config key")
    run.add_argument("--budget", type=int, help="Override run.budget")
    run.add_argument("--jobs", type=int, help="Override run.jobs")
    run.add_argument("--output", metavar="DIR", help="Override run.output")
    run.add_argument("--summary-csv", metavar="FILE", help="Also write the summary table as CSV")

    summ = sub.add_parser("summarize", help="Summarize exported traces")
    summ.add_argument("trace_dir", help="Directory holding exported traces")
    summ.add_argument("--csv", metavar="FILE", help="Write the summary as CSV ('-' for stdout)")

    gen = sub.add_parser("gen", help="Generate a synthetic instance in LIBSVM format")
    gen.add_argument("family", help="Problem family")
    gen.add_argument("m", type=int, help="Number of samples")
    gen.add_argument("n", type=int, help="Number of features")
    gen.add_argument("seed", type=int, help="Generator seed")
    gen.add_argument("-o", "--output", metavar="FILE", help="Output file (default: stdout)")

    return parser.parse_args(argv)


def _setup_logging(trace: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if trace else logging.WARNING,
        format="[%(name)s] %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _overrides(args) -> dict[str, str]:
    overrides = {}
    for item in args.set:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"--set expects KEY=VALUE, got '{item}'")
        overrides[key.strip()] = value.strip()
    if args.budget is not None:
        overrides["run.budget"] = str(args.budget)
    if args.jobs is not None:
        overrides["run.jobs"] = str(args.jobs)
    if args.output is not None:
        overrides["run.output"] = args.output
    return overrides


def _print_summary(traces, csv_path=None) -> None:
    rows = summarize(traces)
    table = render_table(rows)
    if table:
        print(table)
    if csv_path == "-":
        write_summary_csv(rows, sys.stdout)
    elif csv_path:
        with open(csv_path, "w", newline="", encoding="utf-8") as handle:
            write_summary_csv(rows, handle)


def cmd_run(args) -> int:
    config = load_config(args.config, _overrides(args))
    workload = prepare(config)
    print(f"Running {len(config.solvers)} solver(s) on {workload.problem.name}")
    print(f"  Data: {workload.data.m}x{workload.data.n} ({workload.data.provenance})")
    if workload.penalty is not None:
        print(f"  Penalty: {workload.penalty:.6g}")
    if workload.reference is not None:
        print(f"  Optimum: {workload.reference!r} (known)")
    print(f"  Budget: {config.budget} iterations, stride {config.stride}, jobs {config.jobs}")

    traces = run_experiment(config, workload)
    paths = export_trace(traces, config.output, config.formats)
    print(f"  Traces: {len(paths)} file(s) in {config.output}")
    print()
    _print_summary(traces, args.summary_csv)
    if any_diverged(traces):
        for trace in traces:
            if trace.diverged:
                print(f"Error: {trace.solver} diverged: {trace.message}", file=sys.stderr)
        return EXIT_DIVERGED
    return EXIT_OK


def cmd_summarize(args) -> int:
    traces = load_traces(args.trace_dir)
    _print_summary(traces, args.csv)
    return EXIT_OK


def cmd_gen(args) -> int:
    family = get_family(args.family)
    data = family.generate(args.m, args.n, args.seed)
    if args.output:
        try:
            with Path(args.output).open("w", encoding="utf-8") as handle:
                libsvm_dump(data, handle)
        except OSError as exc:
            raise DataError(f"cannot write {args.output}: {exc}") from exc
        print(f"Wrote {data.name} ({data.m}x{data.n}) to {args.output}")
    else:
        libsvm_dump(data, sys.stdout)
    return EXIT_OK


COMMANDS = {"run": cmd_run, "summarize": cmd_summarize, "gen": cmd_gen}


def main(argv=None) -> int:
    """Main entry point."""
    args = parse_args(argv)
    _setup_logging(args.trace)
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, InvalidInputError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DATA
    except DivergedError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DIVERGED


if __name__ == "__main__":
    sys.exit(main())
