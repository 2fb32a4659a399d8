#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Utility module."""

from solitonlab.utility.common import canonical_json, digest, read_json, write_json
from solitonlab.utility.config import Config, config
from solitonlab.utility.log import ArrayLogging, ReportLogging, dump_array, dump_report
from solitonlab.utility.pyarrow import (
    COMPLEX128,
    ComplexArray,
    ComplexType,
    attach_metadata,
    complex_array,
    complex_column,
    read_csv,
    read_feather,
    read_metadata,
    write_csv,
    write_feather,
)
from solitonlab.utility.repr import MAX_REPR_ITEMS, ReprMixin, ReprType

__all__ = [
    "COMPLEX128",
    "MAX_REPR_ITEMS",
    "ArrayLogging",
    "ComplexArray",
    "ComplexType",
    "Config",
    "ReportLogging",
    "ReprMixin",
    "ReprType",
    "attach_metadata",
    "canonical_json",
    "complex_array",
    "complex_column",
    "config",
    "digest",
    "dump_array",
    "dump_report",
    "read_csv",
    "read_feather",
    "read_json",
    "read_metadata",
    "write_csv",
    "write_feather",
    "write_json",
]
