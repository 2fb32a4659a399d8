#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""The implementation of logging utilities."""

import json
from typing import Any, Mapping

import numpy as np

REPORT_TEMPLATE = """
===================================================================
############################ {} ############################
{}
===================================================================
"""


class ArrayLogging:
    """This class used to lazy load array statistics to logging.

    Arguments:
        name: The name of the array.
        array: The array to summarize.

    """

    def __init__(self, name: str, array: np.ndarray) -> None:
        self._name = name
        self._array = array

    def __str__(self) -> str:
        return dump_array(self._name, self._array)


class ReportLogging:
    """This class used to lazy load a report to logging.

    Arguments:
        title: The title of the report.
        report: The report mapping.

    """

    def __init__(self, title: str, report: Mapping[str, Any]) -> None:
        self._title = title
        self._report = report

    def __str__(self) -> str:
        return dump_report(self._title, self._report)


def dump_array(name: str, array: np.ndarray) -> str:
    """Dump the summary statistics of an array.

    Arguments:
        name: The name of the array.
        array: The array to summarize.

    Returns:
        A one-line summary, sample::

            "psi": shape=(4, 2001), dtype=complex128, max|.|=0.0381, finite=True

    """
    if array.size == 0:
        return f'"{name}": shape={array.shape}, dtype={array.dtype}, empty'

    magnitude = np.abs(array)
    return (
        f'"{name}": shape={array.shape}, dtype={array.dtype}, '
        f"max|.|={np.nanmax(magnitude):.6g}, finite={bool(np.all(np.isfinite(array)))}"
    )


def dump_report(title: str, report: Mapping[str, Any]) -> str:
    """Dump a report mapping with a banner.

    Arguments:
        title: The title of the report.
        report: The report mapping.

    Returns:
        The report as indented json inside a banner.

    """
    return REPORT_TEMPLATE.format(title, json.dumps(report, indent=2, sort_keys=True, default=str))
