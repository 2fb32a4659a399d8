#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Partial convolution along ω and the ♯ reflection."""

import logging

import numpy as np
from scipy.signal import convolve

from solitonlab.exception import AsymmetricAxisError, GridMismatchError
from solitonlab.support.grid import GriddedDistribution

logger = logging.getLogger(__name__)


def partial_convolution(f: GriddedDistribution, g: GriddedDistribution) -> GriddedDistribution:
    """Convolve two distributions along ω, pointwise in x.

    Samples outside the supports are set to exact zero first and every column is
    convolved directly, so leading and trailing products are never polluted by
    transform round-off.

    Arguments:
        f: The first distribution.
        g: The second distribution, on the same grid.

    Returns:
        The partial convolution scaled by Δω on the doubled grid. Its threshold is the
        product of the input thresholds times Δω.

    Raises:
        GridMismatchError: When the grids differ.

    """
    if f.grid != g.grid:
        raise GridMismatchError(left=f.grid, right=g.grid)

    grid = f.grid
    delta = grid.delta_omega
    left = f.cleaned()
    right = g.cleaned()
    values = np.empty((grid.n_x, 2 * grid.n_omega - 1), dtype=np.complex128)
    for index in range(grid.n_x):
        values[index] = convolve(left[index], right[index], method="direct")

    logger.debug("Convolved %d columns of %d samples", grid.n_x, grid.n_omega)
    return GriddedDistribution(
        grid.doubled(), values * delta, f.support_threshold * g.support_threshold * delta
    )


def sharp(f: GriddedDistribution) -> GriddedDistribution:
    """Return f♯(x, ω) = conj(f(x, -ω)).

    Arguments:
        f: The distribution.

    Returns:
        The reflected and conjugated distribution on the same grid.

    Raises:
        AsymmetricAxisError: When the ω axis is not symmetric about 0.

    """
    if not f.grid.is_symmetric():
        raise AsymmetricAxisError(
            f"ω axis [{f.grid.omega_min}, {f.grid.omega_max}] is not symmetric about 0"
        )

    return GriddedDistribution(f.grid, np.conj(f.values[:, ::-1]), f.support_threshold)
