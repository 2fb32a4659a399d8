#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Wave bundles: a directory with profile, potential and nonlinearity tables."""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from solitonlab.radial import RadialEigenpair, RadialGrid, load_potential, save_potential
from solitonlab.soliton.spinor import SpinorFrame
from solitonlab.soliton.table import NonlinearityTable
from solitonlab.soliton.wave import MultiFrequencyWave
from solitonlab.utility import read_csv, read_json, write_csv, write_json

logger = logging.getLogger(__name__)

_PathLike = Union[str, Path]

WAVE_FILE = "wave.json"
PROFILES_FILE = "profiles.csv"
POTENTIAL_FILE = "potential.json"
NONLINEARITY_FILE = "nonlinearity.csv"


def save_bundle(
    wave: MultiFrequencyWave,
    table: NonlinearityTable,
    directory: _PathLike,
    validation: Optional[Dict[str, Any]] = None,
) -> Path:
    """Save a wave and its nonlinearity as a self-describing bundle directory.

    The directory holds ``profiles.csv`` (r, v0, u0, v1, u1), ``potential.json`` with
    its samples, ``nonlinearity.csv`` (tau, f) and ``wave.json`` with amplitudes,
    frequencies, frame and metadata.

    Arguments:
        wave: The wave.
        table: The nonlinearity table of the wave.
        directory: The bundle directory, created when missing.
        validation: The validation report to embed.

    Returns:
        The bundle directory.

    """
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    ground, excited = wave.pairs

    write_csv(
        {
            "r": wave.grid.nodes,
            "v0": ground.v,
            "u0": ground.u,
            "v1": excited.v,
            "u1": excited.u,
        },
        path / PROFILES_FILE,
    )
    write_csv({"tau": table.knots, "f": table.values}, path / NONLINEARITY_FILE)
    save_potential(wave.potential, wave.grid, path / POTENTIAL_FILE)

    contents: Dict[str, Any] = {
        "amplitudes": [[value.real, value.imag] for value in wave.amplitudes],
        "frequencies": list(wave.frequencies),
        "node_counts": [pair.node_count for pair in wave.pairs],
        "residuals": [pair.residual for pair in wave.pairs],
        "m": wave.m,
        "grid": wave.grid.to_pyobj(),
        "frame": wave.frame.to_pyobj(),
        "nonlinearity": table.to_pyobj(),
    }
    if validation is not None:
        contents["validation"] = validation
    write_json(contents, path / WAVE_FILE)
    logger.info("Saved wave bundle to %s", path)
    return path


def load_bundle(directory: _PathLike) -> Tuple[MultiFrequencyWave, NonlinearityTable]:
    """Load a bundle saved by :func:`save_bundle`.

    Arguments:
        directory: The bundle directory.

    Returns:
        The wave and its nonlinearity table.

    """
    path = Path(directory)
    contents = read_json(path / WAVE_FILE)
    columns = read_csv(path / PROFILES_FILE)
    grid = RadialGrid.from_pyobj(contents["grid"])

    pairs = [
        RadialEigenpair(
            omega,
            columns[f"v{level}"].astype(np.float64),
            columns[f"u{level}"].astype(np.float64),
            node_count,
            grid,
            contents["m"],
            3,
            residual,
        )
        for level, (omega, node_count, residual) in enumerate(
            zip(contents["frequencies"], contents["node_counts"], contents["residuals"])
        )
    ]
    wave = MultiFrequencyWave(
        pairs[0],
        pairs[1],
        [complex(real, imag) for real, imag in contents["amplitudes"]],
        load_potential(path / POTENTIAL_FILE),
        SpinorFrame.from_pyobj(contents["frame"]),
    )

    knots = read_csv(path / NONLINEARITY_FILE)
    table = NonlinearityTable(
        knots["tau"].astype(np.float64),
        knots["f"].astype(np.float64),
        contents["nonlinearity"]["rule"],
    )
    return wave, table
