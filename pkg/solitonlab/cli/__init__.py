#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Run configs, pipelines and reports of the ``solitonlab`` command line."""

from solitonlab.cli.config import RunConfig, load_config, parse_overrides
from solitonlab.cli.main import exit_code, main, run
from solitonlab.cli.pipelines import PIPELINES, Pipeline, PipelineResult, RunContext

__all__ = [
    "PIPELINES",
    "Pipeline",
    "PipelineResult",
    "RunConfig",
    "RunContext",
    "exit_code",
    "load_config",
    "main",
    "parse_overrides",
    "run",
]
