#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""CSV and json serialization of potentials and radial eigenpairs."""

from pathlib import Path
from typing import Union

import numpy as np

from solitonlab.radial.dirac import RadialEigenpair
from solitonlab.radial.grid import RadialGrid
from solitonlab.radial.potential import RadialPotential, potential_from_pyobj
from solitonlab.utility import read_csv, read_json, write_csv, write_json

_PathLike = Union[str, Path]


def save_potential(potential: RadialPotential, grid: RadialGrid, path: _PathLike) -> Path:
    """Save the samples of a potential as CSV (r, value) with a json descriptor.

    Arguments:
        potential: The potential.
        grid: The radial grid of the samples.
        path: The descriptor path; the CSV gets the same stem with a ``.csv`` suffix.

    Returns:
        The descriptor path.

    """
    descriptor = Path(path)
    data_path = descriptor.with_suffix(".csv")
    write_csv({"r": grid.nodes, "value": potential.sample(grid)}, data_path)

    contents = potential.to_pyobj()
    contents["grid"] = grid.to_pyobj()
    contents["data_path"] = data_path.name
    write_json(contents, descriptor)
    return descriptor


def load_potential(path: _PathLike) -> RadialPotential:
    """Load a potential saved by :func:`save_potential`.

    Closed-form families are rebuilt from their parameters, tabulated ones from the CSV.

    Arguments:
        path: The descriptor path.

    Returns:
        The loaded potential.

    """
    descriptor = Path(path)
    contents = read_json(descriptor)
    values = read_csv(descriptor.parent / contents["data_path"])["value"]
    return potential_from_pyobj(contents, values.astype(np.float64))


def save_eigenpair(pair: RadialEigenpair, path: _PathLike) -> Path:
    """Save an eigenpair as CSV (r, v, u) with a json descriptor.

    Arguments:
        pair: The eigenpair.
        path: The descriptor path; the CSV gets the same stem with a ``.csv`` suffix.

    Returns:
        The descriptor path.

    """
    descriptor = Path(path)
    data_path = descriptor.with_suffix(".csv")
    write_csv({"r": pair.grid.nodes, "v": pair.v, "u": pair.u}, data_path)

    contents = pair.to_pyobj()
    contents["data_path"] = data_path.name
    write_json(contents, descriptor)
    return descriptor


def load_eigenpair(path: _PathLike) -> RadialEigenpair:
    """Load an eigenpair saved by :func:`save_eigenpair`.

    Arguments:
        path: The descriptor path.

    Returns:
        The loaded eigenpair.

    """
    descriptor = Path(path)
    contents = read_json(descriptor)
    columns = read_csv(descriptor.parent / contents["data_path"])
    return RadialEigenpair(
        contents["omega"],
        columns["v"].astype(np.float64),
        columns["u"].astype(np.float64),
        contents["node_count"],
        RadialGrid.from_pyobj(contents["grid"]),
        contents["m"],
        contents["n"],
        contents["residual"],
    )
