#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Run reports: ``report.json`` and its ``timing.json`` sidecar."""

import logging
import platform
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
import pyarrow as pa
import scipy

from solitonlab.__version__ import __version__
from solitonlab.cli.config import RunConfig
from solitonlab.cli.pipelines import Pipeline, PipelineResult, RunContext
from solitonlab.exception import SolitonLabException
from solitonlab.utility import ReportLogging, digest, write_json

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
TIMING_FILE = "timing.json"


def versions() -> Dict[str, str]:
    """Return the versions of solitonlab and its numerical stack.

    Returns:
        Package name to version.

    """
    return {
        "solitonlab": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pyarrow": pa.__version__,
    }


def build_report(  # pylint: disable=too-many-arguments
    config: RunConfig,
    pipeline: Pipeline,
    arguments: Dict[str, Any],
    result: PipelineResult,
    context: RunContext,
    error: Optional[SolitonLabException] = None,
) -> Dict[str, Any]:
    """Assemble the json report of a run.

    The report echoes the bound arguments and embeds the digest of the echo, so two
    reports with the same hash come from the same inputs. It holds no wall time.

    Arguments:
        config: The run config.
        pipeline: The pipeline that ran.
        arguments: The bound arguments.
        result: The pipeline result.
        context: The output context with the recorded artifacts.
        error: The error that stopped the pipeline, if any.

    Returns:
        The json-able report.

    """
    echo = {
        "pipeline": pipeline.name,
        "arguments": pipeline.params.dump(arguments),
        "seed": config.seed,
        "format": config.output_format,
    }
    report: Dict[str, Any] = {
        "config": echo,
        "config_hash": digest(echo),
        "versions": versions(),
        "assertions": result.assertions,
        "failures": result.failures,
        "passed": error is None and result.passed,
        "results": result.results,
        "artifacts": sorted(context.artifacts),
    }
    if error is not None:
        report["error"] = {"type": type(error).__name__, "message": str(error)}
    return report


def write_report(output: Path, report: Dict[str, Any], wall_time: float) -> Path:
    """Write the report and the timing sidecar.

    Arguments:
        output: The output directory.
        report: The report returned by :func:`build_report`.
        wall_time: The wall time of the pipeline in seconds.

    Returns:
        The report path.

    """
    path = output / REPORT_FILE
    write_json(report, path)
    write_json({"wall_time": wall_time}, output / TIMING_FILE)
    logger.debug(ReportLogging("Run report", report))
    logger.info("Wrote %s (%.2f s)", path, wall_time)
    return path
