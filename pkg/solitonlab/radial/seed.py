#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Nonrelativistic seeds of radial Dirac eigenpairs and the ω → m sweep."""

import logging
from typing import Dict, Iterable, List, Optional, Tuple, Type, TypeVar

import numpy as np
from tensorbay.utility import AttrsMixin, attr, common_loads

from solitonlab.radial.dirac import dirac_eigen
from solitonlab.radial.grid import RadialGrid
from solitonlab.radial.potential import RadialPotential, scale_to_dirac_potential
from solitonlab.radial.schrodinger import SchrodingerEigenpair
from solitonlab.utility import ReprMixin

logger = logging.getLogger(__name__)


def nonrelativistic_seed(
    phi: SchrodingerEigenpair, m: float, omega: float, grid: RadialGrid
) -> Tuple[np.ndarray, np.ndarray]:
    """Return the seed v̂(r) = φ(√(m-ω)·r), û = -v̂'/(2m) on a radial grid.

    Arguments:
        phi: The Schrödinger eigenpair.
        m: The mass.
        omega: The frequency in (0, m).
        grid: The radial grid of the seed.

    Returns:
        The samples of v̂ and û.

    Raises:
        ValueError: When ω is outside (0, m).

    """
    if not 0 < omega < m:
        raise ValueError(f"ω = {omega} is outside (0, {m})")

    v_hat = np.asarray(phi(np.sqrt(m - omega) * grid.nodes), dtype=np.float64)
    u_hat = -grid.derivative(v_hat, "even") / (2 * m)
    return v_hat, u_hat


class SweepPoint(AttrsMixin, ReprMixin):
    """This class defines one frequency of a nonrelativistic sweep.

    Arguments:
        omega: The frequency ω = m - 2^{-k}.
        level: The Dirac eigenvalue.
        relative_shift: (level - prediction)/(m - ω), the prediction being m + (m - ω)·E.
        profile_distance: The relative L² distance of the eigenpair and the normalized seed.
        seed_ratio: ‖û‖/‖v̂‖.

    """

    _T = TypeVar("_T", bound="SweepPoint")

    _repr_attrs = ("omega", "level", "relative_shift", "profile_distance", "seed_ratio")

    omega: float = attr()
    level: float = attr()
    relative_shift: float = attr()
    profile_distance: float = attr()
    seed_ratio: float = attr()

    def __init__(
        self,
        omega: float,
        level: float,
        relative_shift: float,
        profile_distance: float,
        seed_ratio: float,
    ) -> None:
        self.omega = omega
        self.level = level
        self.relative_shift = relative_shift
        self.profile_distance = profile_distance
        self.seed_ratio = seed_ratio

    @classmethod
    def from_pyobj(cls: Type[_T], contents: Dict[str, float]) -> _T:
        """Create a :class:`SweepPoint` instance from python dict.

        Arguments:
            contents: A python dict of the sweep point.

        Returns:
            The loaded :class:`SweepPoint` instance.

        """
        return common_loads(cls, contents)

    def to_pyobj(self) -> Dict[str, float]:
        """Dump the instance to a python dict.

        Returns:
            A python dict of the sweep point.

        """
        return self._dumps()  # type: ignore[no-any-return]


def nonrelativistic_sweep(
    potential: RadialPotential,
    phi: SchrodingerEigenpair,
    m: float,
    exponents: Iterable[int] = range(2, 7),
    n_r: Optional[int] = None,
) -> List[SweepPoint]:
    """Solve the Dirac level bifurcating from φ along ω = m - 2^{-k}.

    The Dirac grid of each frequency is the grid of φ stretched by 1/√(m-ω).

    Arguments:
        potential: The Schrödinger potential W of φ.
        phi: The Schrödinger eigenpair.
        m: The mass.
        exponents: The exponents k.
        n_r: The number of grid intervals, defaults to the one of φ.

    Returns:
        The sweep points in the order of the exponents.

    """
    points = []
    for exponent in exponents:
        gap = 2.0**-exponent
        omega = m - gap
        grid = RadialGrid(phi.grid.r_max / np.sqrt(gap), n_r or phi.grid.n_r)
        prediction = m + gap * phi.energy
        pair = dirac_eigen(
            scale_to_dirac_potential(potential, m, omega),
            m,
            prediction,
            phi.node_count,
            grid,
            phi.n,
        )

        v_hat, u_hat = nonrelativistic_seed(phi, m, omega, grid)
        seed_norm = np.sqrt(grid.integrate(v_hat**2 + u_hat**2, phi.n))
        difference = (pair.v - v_hat / seed_norm) ** 2 + (pair.u - u_hat / seed_norm) ** 2
        distance = np.sqrt(grid.integrate(difference, phi.n))
        point = SweepPoint(
            omega,
            pair.omega,
            (pair.omega - prediction) / gap,
            float(distance),
            float(np.sqrt(grid.integrate(u_hat**2, phi.n) / grid.integrate(v_hat**2, phi.n))),
        )
        logger.info("Sweep point %s", point)
        points.append(point)
    return points
