#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The radial Schrödinger eigen-solver for -(1/2m)Δφ - Wφ = Eφ."""

import logging
from typing import Any, Dict, List, Tuple

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.linalg import eigh_tridiagonal

from solitonlab.exception import NoBoundStateError
from solitonlab.radial.grid import RadialGrid, count_nodes
from solitonlab.radial.potential import RadialArgument, RadialPotential
from solitonlab.utility import ArrayLogging, ReprMixin, config

logger = logging.getLogger(__name__)

_REFINEMENTS = (1, 2, 4)
_RICHARDSON_WEIGHTS = np.array([1.0, -20.0, 64.0]) / 45.0


class SchrodingerEigenpair(ReprMixin):
    """This class defines a radial Schrödinger eigenpair.

    Arguments:
        energy: The eigenvalue E < 0.
        phi: The eigenfunction samples on the grid nodes, normalized in L²(r^{n-1}dr).
        node_count: The number of nodes of φ.
        grid: The radial grid.
        m: The mass.
        n: The spatial dimension.

    """

    _repr_attrs = ("energy", "node_count", "grid", "phi")

    def __init__(
        self,
        energy: float,
        phi: np.ndarray,
        node_count: int,
        grid: RadialGrid,
        m: float,
        n: int = 3,
    ) -> None:
        phi = np.array(phi, dtype=np.float64)
        phi.setflags(write=False)
        self.energy = float(energy)
        self.phi = phi
        self.node_count = node_count
        self.grid = grid
        self.m = m
        self.n = n
        self._spline = CubicSpline(grid.nodes, phi, bc_type=((1, 0.0), "not-a-knot"))

    def __call__(self, r: RadialArgument) -> RadialArgument:
        """Evaluate φ by cubic spline interpolation, with 0 beyond r_max.

        Arguments:
            r: The radii.

        Returns:
            The interpolated values.

        """
        r = np.abs(np.asarray(r, dtype=np.float64))
        return np.where(r <= self.grid.r_max, self._spline(np.minimum(r, self.grid.r_max)), 0.0)

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the eigenpair metadata to a python dict.

        Returns:
            A python dict with the energy, node count, mass, dimension and grid.

        """
        return {
            "energy": self.energy,
            "node_count": self.node_count,
            "m": self.m,
            "n": self.n,
            "grid": self.grid.to_pyobj(),
        }


def _tridiagonal(
    potential: RadialPotential, m: float, grid: RadialGrid, n: int
) -> Tuple[np.ndarray, np.ndarray]:
    # Second order differences for χ = r^{(n-1)/2}φ with χ(0) = χ(r_max) = 0.
    nodes = grid.nodes[1:-1]
    h = grid.delta
    diagonal = (
        1.0 / (m * h**2) + (n - 1) * (n - 3) / (8.0 * m * nodes**2) - potential(nodes)
    )
    off_diagonal = np.full(nodes.size - 1, -1.0 / (2.0 * m * h**2))
    return diagonal, off_diagonal


def _levels(
    potential: RadialPotential, m: float, grid: RadialGrid, count: int, n: int
) -> List[np.ndarray]:
    levels = []
    for factor in _REFINEMENTS:
        diagonal, off_diagonal = _tridiagonal(potential, m, grid.refined(factor), n)
        levels.append(
            eigh_tridiagonal(
                diagonal,
                off_diagonal,
                eigvals_only=True,
                select="i",
                select_range=(0, count - 1),
            )
        )
    return levels


def _check_dimension(n: int) -> None:
    if n < 2:
        raise ValueError("The radial Schrödinger solver needs dimension n ≥ 2")


def schrodinger_levels(
    potential: RadialPotential, m: float, grid: RadialGrid, count: int = 2, n: int = 3
) -> np.ndarray:
    """Compute the lowest radial (ℓ = 0) levels of -(1/2m)Δ - W.

    The levels of the second order finite-difference operator on the grid and its
    two refinements are combined by Richardson extrapolation.

    Arguments:
        potential: The potential W.
        m: The mass.
        grid: The coarsest radial grid.
        count: The number of levels.
        n: The spatial dimension.

    Returns:
        The extrapolated levels in increasing order.

    """
    _check_dimension(n)
    return _RICHARDSON_WEIGHTS @ np.stack(_levels(potential, m, grid, count, n))


def schrodinger_eigen(
    potential: RadialPotential, m: float, node_count: int, grid: RadialGrid, n: int = 3
) -> SchrodingerEigenpair:
    """Solve for the radial bound state of -(1/2m)Δ - W with the given node count.

    Arguments:
        potential: The potential W.
        m: The mass.
        node_count: The number of nodes of the requested state.
        grid: The radial grid of the returned profile.
        n: The spatial dimension.

    Returns:
        The normalized eigenpair with φ(0) > 0.

    Raises:
        NoBoundStateError: When the requested level is not negative.

    """
    _check_dimension(n)
    if node_count < 0:
        raise ValueError("The node count must be non-negative")

    levels = _levels(potential, m, grid, node_count + 1, n)
    energy = float(_RICHARDSON_WEIGHTS @ np.stack(levels)[:, node_count])
    logger.debug("Levels with %d nodes on refined grids: %s", node_count, levels)
    if energy >= 0 or any(level[node_count] >= 0 for level in levels):
        raise NoBoundStateError(
            node_count=node_count, found=int(np.count_nonzero(levels[-1] < 0))
        )

    fine = grid.refined(_REFINEMENTS[-1])
    diagonal, off_diagonal = _tridiagonal(potential, m, fine, n)
    _, vectors = eigh_tridiagonal(
        diagonal, off_diagonal, select="i", select_range=(node_count, node_count)
    )

    chi = np.zeros(fine.n_r + 1)
    chi[1:-1] = vectors[:, 0]
    phi = np.zeros_like(chi)
    phi[1:] = chi[1:] / fine.nodes[1:] ** ((n - 1) / 2)
    phi[0] = (4 * phi[1] - phi[2]) / 3
    phi = phi[:: _REFINEMENTS[-1]]

    phi /= np.sqrt(grid.integrate(phi**2, n))
    if phi[0] < 0:
        phi = -phi

    found = count_nodes(phi, config.noise_floor)
    if found != node_count:
        logger.warning("Schrödinger state expected %d nodes, counted %d", node_count, found)

    logger.info("Schrödinger level with %d nodes: E = %.12g", node_count, energy)
    logger.debug(ArrayLogging("phi", phi))
    return SchrodingerEigenpair(energy, phi, node_count, grid, m, n)
