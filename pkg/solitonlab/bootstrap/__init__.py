#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The exponent recursion of the regularity bootstrap."""

from solitonlab.bootstrap.exponent import (
    BootstrapState,
    BootstrapStep,
    Status,
    format_exponent,
    gain_lower_bound,
    initial_exponent,
    parse_exponent,
    step,
    to_fraction,
)
from solitonlab.bootstrap.trace import (
    BootstrapTrace,
    gain_step_bound,
    run,
    save_trace_csv,
    step_bound,
)

__all__ = [
    "BootstrapState",
    "BootstrapStep",
    "BootstrapTrace",
    "Status",
    "format_exponent",
    "gain_lower_bound",
    "gain_step_bound",
    "initial_exponent",
    "parse_exponent",
    "run",
    "save_trace_csv",
    "step",
    "step_bound",
    "to_fraction",
]
