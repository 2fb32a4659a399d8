#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Tuning of a Gaussian well to prescribed Schrödinger levels."""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import root

from solitonlab.exception import RootFindFailedError
from solitonlab.radial.grid import RadialGrid
from solitonlab.radial.potential import GaussianPotential
from solitonlab.radial.schrodinger import schrodinger_levels

logger = logging.getLogger(__name__)

DEFAULT_TARGETS = (-1.0, -0.5)
DEFAULT_TOLERANCE = 1e-8


def default_tuning_grid(m: float) -> RadialGrid:
    """Return the grid used for tuning at a given mass.

    Lengths scale like 1/√m for fixed levels.

    Arguments:
        m: The mass.

    Returns:
        A grid reaching 40/√m with 800 intervals.

    """
    return RadialGrid(40.0 / np.sqrt(m), 800)


def harmonic_guess(
    m: float, targets: Sequence[float] = DEFAULT_TARGETS, n: int = 3
) -> Tuple[float, float]:
    """Return (A, σ) matching the targets in the harmonic approximation of the well.

    Arguments:
        m: The mass.
        targets: The two lowest levels.
        n: The spatial dimension.

    Returns:
        The depth and the width.

    """
    frequency = (targets[1] - targets[0]) / 2
    depth = n / 2 * frequency - targets[0]
    width = np.sqrt(2 * depth / m) / frequency
    return depth, width


def tune_potential(
    m: float,
    grid: Optional[RadialGrid] = None,
    targets: Sequence[float] = DEFAULT_TARGETS,
    tolerance: float = DEFAULT_TOLERANCE,
    n: int = 3,
) -> GaussianPotential:
    """Tune a Gaussian well A·exp(-r²/σ²) so that its two lowest levels hit the targets.

    The search is a quasi-Newton iteration on (log A, log σ).

    Arguments:
        m: The mass.
        grid: The radial grid of the level computations.
        targets: The prescribed levels (E₀, E₁).
        tolerance: The largest admissible level error.
        n: The spatial dimension.

    Returns:
        The tuned potential.

    Raises:
        ValueError: When m is not positive.
        RootFindFailedError: When the levels miss the targets by more than the tolerance.

    """
    if not m > 0:
        raise ValueError("The mass must be positive")
    if grid is None:
        grid = default_tuning_grid(m)

    target = np.asarray(targets, dtype=np.float64)

    def residual(log_parameters: np.ndarray) -> np.ndarray:
        depth, width = np.exp(np.clip(log_parameters, -30.0, 30.0))
        levels = schrodinger_levels(GaussianPotential(depth, width), m, grid, len(target), n)
        logger.debug("A=%.12g, σ=%.12g: levels %s", depth, width, levels)
        return levels - target  # type: ignore[no-any-return]

    solution = root(residual, np.log(harmonic_guess(m, targets, n)), method="hybr", tol=1e-13)
    depth, width = np.exp(solution.x)
    errors = residual(solution.x)
    if not np.all(np.abs(errors) <= tolerance):
        raise RootFindFailedError(
            solution.message, residuals=errors.tolist(), parameters=[depth, width]
        )

    logger.info(
        "Tuned Gaussian well: A = %.12g, σ = %.12g (%d evaluations)", depth, width, solution.nfev
    )
    return GaussianPotential(depth, width)
