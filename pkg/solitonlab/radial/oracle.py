#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The finite-difference matrix oracle for radial Dirac eigenvalues."""

import logging

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import eigsh

from solitonlab.radial.grid import RadialGrid
from solitonlab.radial.potential import RadialPotential

logger = logging.getLogger(__name__)

_REFINEMENTS = (1, 2, 4)
_RICHARDSON_WEIGHTS = np.array([1.0, -20.0, 64.0]) / 45.0


def dirac_matrix(
    potential: RadialPotential, m: float, grid: RadialGrid, n: int = 3
) -> sparse.csc_matrix:
    """Build the symmetric staggered-grid matrix of the radial Dirac operator.

    With G = r^k·v and F = r^k·u, k = (n-1)/2, the operator reads::

        ωG = F' + kF/r + (m - V)G
        ωF = -G' + kG/r - (m - V)F

    G lives on the half nodes (i + 1/2)Δr, i = 0..n_r-1, and F on the interior nodes
    iΔr, i = 1..n_r-1, so that F(0) = F(r_max) = 0.

    Arguments:
        potential: The Dirac potential V.
        m: The mass.
        grid: The radial grid.
        n: The spatial dimension.

    Returns:
        The sparse symmetric matrix of order 2·n_r - 1.

    """
    h = grid.delta
    k = (n - 1) / 2
    half_nodes = (np.arange(grid.n_r) + 0.5) * h
    nodes = grid.nodes[1:-1]

    # Row j: G equation at half node j. Column j: F at node j + 1.
    coupling = sparse.diags(
        [1.0 / h + k / (2 * nodes), -1.0 / h + k / (2 * nodes)],
        [0, -1],
        shape=(grid.n_r, grid.n_r - 1),
    )
    upper = sparse.diags(m - potential(half_nodes))
    lower = sparse.diags(-(m - potential(nodes)))
    return sparse.bmat([[upper, coupling], [coupling.T, lower]], format="csc")


def dirac_matrix_eigenvalues(
    potential: RadialPotential,
    m: float,
    omega_guess: float,
    grid: RadialGrid,
    n: int = 3,
) -> float:
    """Compute the radial Dirac eigenvalue nearest a guess by the matrix oracle.

    The eigenvalues on the grid and its two refinements are combined by Richardson
    extrapolation.

    Arguments:
        potential: The Dirac potential V.
        m: The mass.
        omega_guess: The shift of the shift-invert eigensolver.
        grid: The coarsest radial grid.
        n: The spatial dimension.

    Returns:
        The extrapolated eigenvalue.

    Raises:
        ValueError: When n < 2.

    """
    if n < 2:
        raise ValueError("The matrix oracle needs dimension n ≥ 2")

    levels = []
    for factor in _REFINEMENTS:
        matrix = dirac_matrix(potential, m, grid.refined(factor), n)
        values = eigsh(matrix, k=1, sigma=omega_guess, which="LM", return_eigenvectors=False)
        levels.append(float(values[0]))

    omega = float(_RICHARDSON_WEIGHTS @ levels)
    logger.debug("Matrix eigenvalues %s extrapolate to %.14g", levels, omega)
    return omega
