"""
The `cluster-bench` command line.

    cluster-bench run --config experiment.yaml [--datasets iris,wine] [--algorithms fpakm]
                      [--runs 10] [--seed 42] [--out report.csv --format csv]
    cluster-bench gen-artset1 --seed 1 --out artset1.csv
    cluster-bench validate --manifest manifest.yaml

Exit codes: 0 success, 1 validation failure, 2 failure in at least one run,
64 bad command-line usage.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .. import __version__
from ..data.dataset import generate_artset1, write_delimited
from ..data.manifest import REFERENCE_SHAPES, load_manifest
from ..utils.exceptions import EX_ERROR, EX_OK, EX_USAGE, EX_VALIDATION, DatasetError, log_uncaught
from ..utils.strings import dataset_key
from .config import load_experiment_config
from .experiment import run_experiment
from .report import emit_report

__all__ = [
    "main",
    "build_parser",
]

LOG = logging.getLogger("clusterbench")


class ArgumentParser(argparse.ArgumentParser):
    """Exits with EX_USAGE on bad arguments (argparse's own 2 is EX_ERROR here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _add_switch(parser: argparse.ArgumentParser, name: str, dest: str, help: str) -> None:
    """--name sets `dest` to True, --no-name to False; neither leaves it None."""
    parser.add_argument(f"--{name}", dest=dest, action="store_const", const=True, help=help)
    parser.add_argument(f"--no-{name}", dest=dest, action="store_const", const=False)


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="cluster-bench",
        description="K-Means / FPA / FPAKM clustering benchmark.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug detail")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run the comparison experiment")
    run.add_argument("--config", type=Path, help="YAML experiment config")
    run.add_argument("--manifest", type=Path, help="YAML dataset manifest")
    run.add_argument("--datasets", help="comma-separated dataset names")
    run.add_argument("--algorithms", help="comma-separated subset of kmeans,fpa,fpakm")
    run.add_argument("--runs", type=int)
    run.add_argument("--seed", type=int, help="base seed; run r uses seed + r")
    run.add_argument("--workers", type=int)
    run.add_argument("--max-iter", dest="max_iter", type=int)
    run.add_argument("--num-flowers", dest="num_flowers", type=int)
    run.add_argument("--switch-p", dest="switch_p", type=float)
    run.add_argument("--limit", type=float)
    run.add_argument("--levy-scale", dest="levy_scale", type=float)
    run.add_argument("--levy-lambda", dest="levy_lambda", type=float, help="Lévy exponent (1 < lambda <= 2)")
    _add_switch(run, "clamp", "clamp", "keep centroids inside the data bounds")
    run.add_argument("--local-search-iters", dest="local_search_iters", type=int)
    _add_switch(run, "greedy-local-search", "greedy_local_search", "keep a K-Means result only if it is no worse")
    _add_switch(run, "reset-trial", "reset_trial_after_local_search", "restart the stagnation count after each local search")
    run.add_argument("--kmeans-max-iters", dest="kmeans_max_iters", type=int)
    run.add_argument("--kmeans-tol", dest="kmeans_tol", type=float)
    run.add_argument("--format", help="table, csv or json-lines")
    run.add_argument("--out", type=Path, help="report file (the per-run log goes next to it)")

    gen = commands.add_parser("gen-artset1", help="write the synthetic Artset1 dataset")
    gen.add_argument("--seed", type=int, default=1)
    gen.add_argument("--out", type=Path, required=True)
    gen.add_argument("--delimiter", default=",", help="',' (default) or 'whitespace'")

    validate = commands.add_parser("validate", help="check every manifest dataset against its expected shape")
    validate.add_argument("--manifest", type=Path, required=True)
    return parser


def _configure_logging(args) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(message)s")


# ############################################################################
#                                                                     COMMANDS
# ############################################################################

RUN_OVERRIDES = ("manifest", "datasets", "algorithms", "runs", "seed", "workers", "max_iter", "num_flowers",
                 "switch_p", "limit", "levy_scale", "levy_lambda", "clamp", "local_search_iters",
                 "greedy_local_search", "reset_trial_after_local_search", "kmeans_max_iters", "kmeans_tol",
                 "format", "out")


def command_run(args) -> int:
    cfg = load_experiment_config(args.config, {key: getattr(args, key) for key in RUN_OVERRIDES})
    if cfg.manifest is None:
        LOG.error("No dataset manifest given (use --manifest or the 'manifest' config setting).")
        return EX_VALIDATION
    manifest = load_manifest(cfg.manifest)
    result = run_experiment(cfg, manifest)
    emit_report(result.stats, cfg.report_format, cfg.out, records=result.records)
    if result.failures:
        LOG.error(f"{len(result.failures)} of {len(result.records)} runs failed.")
        return EX_ERROR
    return EX_OK


def command_gen_artset1(args) -> int:
    dataset = generate_artset1(args.seed)
    write_delimited(dataset, args.out, args.delimiter)
    LOG.info(f"Wrote {dataset!r} (seed {args.seed}) to {args.out}")
    return EX_OK


def command_validate(args) -> int:
    manifest = load_manifest(args.manifest)
    exitcode = EX_OK
    for name in manifest.names:
        entry = manifest.entry(name)
        try:
            dataset = entry.load()
        except DatasetError as e:
            LOG.error(f"INVALID {name}: {e}")
            exitcode = EX_VALIDATION
            continue
        reference = REFERENCE_SHAPES.get(dataset_key(name))
        LOG.info(f"OK {name}: (attributes, classes, instances) = {dataset.shape}"
                 + (f", reference {reference}" if reference else ""))
    return exitcode


COMMANDS = {
    "run": command_run,
    "gen-artset1": command_gen_artset1,
    "validate": command_validate,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    try:
        return COMMANDS[args.command](args)
    except Exception as e:  # noqa
        return log_uncaught(e, LOG)


if __name__ == "__main__":
    sys.exit(main())
