#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The ``solitonlab`` command line.

Usage::

    solitonlab run PIPELINE [KEY=VALUE ...] [--config FILE] [--output DIR] [--seed N]
                   [--format json|csv] [--verbose]
    solitonlab PIPELINE [KEY=VALUE ...] [pipeline options] [common options]

Exit codes are 0 when every assertion passes, 1 on a failed assertion or a numerical
error, and 2 on a usage or config error.

"""

import argparse
import logging
import sys
import time
from typing import Any, Dict, Optional, Sequence, Tuple

from solitonlab.__version__ import __version__
from solitonlab.cli.config import FORMATS, RunConfig, load_config, parse_overrides, parse_value
from solitonlab.cli.pipelines import PIPELINES, PipelineResult, RunContext
from solitonlab.cli.report import build_report, write_report
from solitonlab.exception import (
    EXIT_CODE_DISTRIBUTOR,
    AssertionFailedError,
    ConfigError,
    RunError,
    SolitonLabException,
)

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# (flag, parameter, parse with YAML scalar rules)
_SHORTCUT_OPTIONS: Dict[str, Tuple[Tuple[str, str, bool], ...]] = {
    "bootstrap": (
        ("--n", "n", True),
        ("--kappa", "kappa", True),
        ("--max-iter", "max_iter", True),
    ),
    "evolve": (("--model", "model", False),),
    "spectrum": (("--model", "model", False), ("--trajectory", "trajectory", False)),
    "residual": (("--wave-bundle", "bundle", False),),
}


def exit_code(error: SolitonLabException) -> int:
    """Return the process exit code of an error.

    Arguments:
        error: The error.

    Returns:
        The code of the closest class in :data:`EXIT_CODE_DISTRIBUTOR`.

    """
    for cls in type(error).__mro__:
        if cls in EXIT_CODE_DISTRIBUTOR:
            return EXIT_CODE_DISTRIBUTOR[cls]
    return RunError.EXIT_CODE


def run(config: RunConfig) -> int:
    """Run a pipeline and write its report.

    Nothing is written when the arguments are invalid.

    Arguments:
        config: The run config.

    Returns:
        The process exit code.

    """
    pipeline = PIPELINES[config.pipeline]
    try:
        arguments = pipeline.bind(config.arguments)
    except ConfigError as error:
        logger.error("%s", error)
        return exit_code(error)

    config.output.mkdir(parents=True, exist_ok=True)
    context = RunContext(config.output, config.seed, config.output_format)
    failure: Optional[SolitonLabException] = None
    start = time.perf_counter()
    try:
        result = pipeline.run(arguments, context)
    except SolitonLabException as error:
        logger.error("Pipeline %s stopped: %s", pipeline.name, error)
        result = PipelineResult({}, {})
        failure = error
    wall_time = time.perf_counter() - start

    report = build_report(config, pipeline, arguments, result, context, failure)
    write_report(config.output, report, wall_time)

    if failure is not None:
        return exit_code(failure)
    if not result.passed:
        failure = AssertionFailedError(failures=result.failures)
        logger.error("%s", failure)
        return exit_code(failure)

    logger.info("Pipeline %s passed %d assertion(s)", pipeline.name, len(result.assertions))
    return 0


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", help="YAML run config with one section per pipeline")
    parser.add_argument("--output", help="output directory")
    parser.add_argument("--seed", type=int, help="seed of the randomized suites")
    parser.add_argument(
        "--format", dest="output_format", choices=FORMATS, help="add CSV exports with 'csv'"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    return parser


def _overrides_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "overrides", nargs="*", metavar="KEY=VALUE", help="pipeline parameter overrides"
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser.

    Returns:
        The parser with the ``run`` subcommand and one shortcut per pipeline.

    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="solitonlab", description="Reproducible numerical pipelines for solitary waves."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    run_parser = subparsers.add_parser("run", parents=[common], help="run a pipeline")
    run_parser.add_argument("pipeline", choices=sorted(PIPELINES))
    _overrides_argument(run_parser)

    for name in sorted(PIPELINES):
        shortcut = subparsers.add_parser(name, parents=[common], help=f"run {name}")
        shortcut.set_defaults(pipeline=name)
        _overrides_argument(shortcut)
        for flag, key, _ in _SHORTCUT_OPTIONS.get(name, ()):
            shortcut.add_argument(flag, dest=f"option_{key}", metavar=key.upper())

    return parser


def _shortcut_values(args: argparse.Namespace) -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for _, key, parsed in _SHORTCUT_OPTIONS.get(args.command, ()):
        value = getattr(args, f"option_{key}", None)
        if value is not None:
            values[key] = parse_value(value) if parsed else value
    return values


def _configure_logging(verbose: bool) -> None:
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    package = logging.getLogger("solitonlab")
    for installed in list(package.handlers):
        package.removeHandler(installed)
    package.addHandler(handler)
    package.setLevel(logging.DEBUG if verbose else logging.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the command line and run the selected pipeline.

    Arguments:
        argv: The command line arguments, ``sys.argv[1:]`` when not given.

    Returns:
        The process exit code.

    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        overrides = parse_overrides(args.overrides)
        overrides.update(_shortcut_values(args))
        config = load_config(
            args.config, args.pipeline, overrides, args.output, args.seed, args.output_format
        )
    except ConfigError as error:
        logger.error("%s", error)
        return exit_code(error)

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
