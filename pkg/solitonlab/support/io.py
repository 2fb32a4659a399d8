#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""CSV and json serialization of gridded distributions and Titchmarsh reports."""

from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np

from solitonlab.support.grid import Grid2, GriddedDistribution
from solitonlab.support.titchmarsh import TitchmarshReport
from solitonlab.utility import read_csv, read_json, write_csv, write_json

_PathLike = Union[str, Path]


def _column_names(omega: float) -> Tuple[str, str]:
    label = f"{omega:.17g}"
    return f"re({label})", f"im({label})"


def save_distribution(f: GriddedDistribution, path: _PathLike) -> Path:
    """Save a gridded distribution as a CSV file with a json descriptor.

    The CSV has one row per x node: the x value, then a real and an imaginary column
    per ω node. The descriptor next to it holds the grid, the threshold and the CSV
    file name.

    Arguments:
        f: The distribution.
        path: The descriptor path; the CSV gets the same stem with a ``.csv`` suffix.

    Returns:
        The descriptor path.

    """
    descriptor = Path(path)
    data_path = descriptor.with_suffix(".csv")
    columns: Dict[str, np.ndarray] = {"x": f.grid.x_axis}
    for index, omega in enumerate(f.grid.omega_axis):
        real, imag = _column_names(omega)
        columns[real] = f.values[:, index].real
        columns[imag] = f.values[:, index].imag

    write_csv(columns, data_path)
    write_json(
        {
            "grid": f.grid.to_pyobj(),
            "threshold": f.support_threshold,
            "data_path": data_path.name,
        },
        descriptor,
    )
    return descriptor


def load_distribution(path: _PathLike) -> GriddedDistribution:
    """Load a gridded distribution saved by :func:`save_distribution`.

    Arguments:
        path: The descriptor path.

    Returns:
        The loaded distribution.

    """
    descriptor = Path(path)
    contents = read_json(descriptor)
    grid = Grid2.from_pyobj(contents["grid"])
    columns = read_csv(descriptor.parent / contents["data_path"])
    values = np.empty(grid.shape, dtype=np.complex128)
    for index, omega in enumerate(grid.omega_axis):
        real, imag = _column_names(omega)
        values[:, index] = columns[real] + 1j * columns[imag]

    return GriddedDistribution(grid, values, contents["threshold"])


def save_report(report: TitchmarshReport, path: _PathLike) -> None:
    """Save a Titchmarsh report as json.

    Arguments:
        report: The report.
        path: The output path.

    """
    write_json(report.to_pyobj(), path)
