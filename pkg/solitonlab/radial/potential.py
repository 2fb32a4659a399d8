#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The radial potential families."""

import logging
from typing import Any, Callable, ClassVar, Dict, Optional, Type, TypeVar, Union

import numpy as np
from scipy.interpolate import PchipInterpolator

from solitonlab.radial.grid import RadialGrid
from solitonlab.utility import ReprMixin

logger = logging.getLogger(__name__)

RadialArgument = Union[float, np.ndarray]

_FAMILIES: Dict[str, Type["RadialPotential"]] = {}

_P = TypeVar("_P", bound=Type["RadialPotential"])


def _register(family: str) -> Callable[[_P], _P]:
    def wrapper(cls: _P) -> _P:
        cls.family = family
        _FAMILIES[family] = cls
        return cls

    return wrapper


class RadialPotential(ReprMixin):
    """This class defines the interface of spherically symmetric potentials.

    Subclasses implement ``__call__``, ``scaled`` and ``parameters``.

    """

    family: ClassVar[str] = ""

    def _repr_head(self) -> str:
        return f'{self.__class__.__name__}("{self.family}")'

    def __call__(self, r: RadialArgument) -> RadialArgument:
        raise NotImplementedError

    def scaled(self, factor: float) -> "RadialPotential":
        """Return the potential s·W(√s·r) for a positive factor s.

        Arguments:
            factor: The scaling factor s.

        """
        raise NotImplementedError

    def parameters(self) -> Dict[str, Any]:
        """Return the JSON-able parameters of the potential."""
        raise NotImplementedError

    def sample(self, grid: RadialGrid) -> np.ndarray:
        """Sample the potential on the nodes of a radial grid.

        Arguments:
            grid: The radial grid.

        Returns:
            The samples as a float64 array.

        """
        return np.asarray(self(grid.nodes), dtype=np.float64)

    def is_valid(self, grid: RadialGrid, tail_tolerance: float = 1e-6) -> bool:
        """Check positivity, strict decrease and decay of the samples.

        The origin is skipped when the sample there is not finite.

        Arguments:
            grid: The radial grid.
            tail_tolerance: The largest admissible ratio of the last sample to the first
                finite one.

        Returns:
            Whether the sampled potential is valid.

        """
        values = self.sample(grid)
        values = values[np.isfinite(values)]
        if values.size < 2:
            return False

        positive = bool(np.all(values > 0))
        decreasing = bool(np.all(np.diff(values) < 0))
        decaying = bool(values[-1] <= tail_tolerance * values[0])
        if not (positive and decreasing and decaying):
            logger.debug(
                'Potential "%s" invalid: positive=%s, decreasing=%s, decaying=%s',
                self.family,
                positive,
                decreasing,
                decaying,
            )
        return positive and decreasing and decaying

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the potential to a python dict.

        Returns:
            A python dict of the form {"family": <str>, "parameters": <dict>}.

        """
        return {"family": self.family, "parameters": self.parameters()}


@_register("gaussian")
class GaussianPotential(RadialPotential):
    """The Gaussian well W(r) = A·exp(-r²/σ²).

    Arguments:
        depth: The depth A > 0.
        width: The width σ > 0.

    Raises:
        ValueError: When the depth or the width is not positive.

    """

    _repr_attrs = ("depth", "width")

    def __init__(self, depth: float, width: float) -> None:
        if not (depth > 0 and width > 0):
            raise ValueError("Gaussian depth and width must be positive")
        self.depth = float(depth)
        self.width = float(width)

    def __call__(self, r: RadialArgument) -> RadialArgument:
        return self.depth * np.exp(-np.square(r) / self.width**2)

    def scaled(self, factor: float) -> "GaussianPotential":
        return GaussianPotential(factor * self.depth, self.width / np.sqrt(factor))

    def parameters(self) -> Dict[str, Any]:
        return {"depth": self.depth, "width": self.width}


@_register("coulomb")
class CoulombPotential(RadialPotential):
    """The attractive Coulomb potential W(r) = Z/r, infinite at the origin.

    Arguments:
        charge: The charge Z > 0.

    """

    _repr_attrs = ("charge",)

    def __init__(self, charge: float) -> None:
        if not charge > 0:
            raise ValueError("Coulomb charge must be positive")
        self.charge = float(charge)

    def __call__(self, r: RadialArgument) -> RadialArgument:
        with np.errstate(divide="ignore"):
            return self.charge / np.asarray(r, dtype=np.float64)

    def scaled(self, factor: float) -> "CoulombPotential":
        return CoulombPotential(self.charge * np.sqrt(factor))

    def parameters(self) -> Dict[str, Any]:
        return {"charge": self.charge}


@_register("constant")
class ConstantPotential(RadialPotential):
    """The constant potential, including the free case V ≡ 0.

    Arguments:
        value: The constant value.

    """

    _repr_attrs = ("value",)

    def __init__(self, value: float) -> None:
        self.value = float(value)

    def __call__(self, r: RadialArgument) -> RadialArgument:
        return np.full_like(np.asarray(r, dtype=np.float64), self.value)

    def scaled(self, factor: float) -> "ConstantPotential":
        return ConstantPotential(factor * self.value)

    def parameters(self) -> Dict[str, Any]:
        return {"value": self.value}


@_register("tabulated")
class TabulatedPotential(RadialPotential):
    """The potential given by samples on a radial grid, interpolated with PCHIP.

    Beyond r_max the last sample is continued.

    Arguments:
        grid: The radial grid of the samples.
        values: The samples on the nodes.

    Raises:
        ValueError: When the number of samples does not match the grid.

    """

    _repr_attrs = ("grid", "values")

    def __init__(self, grid: RadialGrid, values: np.ndarray) -> None:
        values = np.array(values, dtype=np.float64)
        if values.shape != (grid.n_r + 1,):
            raise ValueError(f"Expected {grid.n_r + 1} samples, got shape {values.shape}")
        values.setflags(write=False)
        self.grid = grid
        self.values = values
        self._interpolator = PchipInterpolator(grid.nodes, values, extrapolate=False)

    def __call__(self, r: RadialArgument) -> RadialArgument:
        r = np.asarray(r, dtype=np.float64)
        result = np.where(r <= self.grid.r_max, self._interpolator(np.abs(r)), self.values[-1])
        return result if result.ndim else float(result)

    def sample(self, grid: RadialGrid) -> np.ndarray:
        if grid == self.grid:
            return self.values.copy()
        return super().sample(grid)

    def scaled(self, factor: float) -> "TabulatedPotential":
        return TabulatedPotential(self.grid, factor * self(np.sqrt(factor) * self.grid.nodes))

    def parameters(self) -> Dict[str, Any]:
        return {"grid": self.grid.to_pyobj()}


def potential_from_pyobj(
    contents: Dict[str, Any], values: Optional[np.ndarray] = None
) -> RadialPotential:
    """Create a potential from its python dict.

    Arguments:
        contents: A python dict of the form {"family": <str>, "parameters": <dict>}.
        values: The samples of a tabulated potential.

    Returns:
        The loaded potential.

    Raises:
        ValueError: When the family is unknown or a tabulated potential has no samples.

    """
    family = contents["family"]
    if family not in _FAMILIES:
        raise ValueError(f'Unknown potential family "{family}"')

    parameters = dict(contents["parameters"])
    if family == "tabulated":
        if values is None:
            raise ValueError("A tabulated potential needs its samples")
        return TabulatedPotential(RadialGrid.from_pyobj(parameters["grid"]), values)
    return _FAMILIES[family](**parameters)  # type: ignore[call-arg]


def scale_to_dirac_potential(
    potential: RadialPotential, m: float, omega: float, grid: Optional[RadialGrid] = None
) -> RadialPotential:
    """Scale a Schrödinger potential W to the Dirac potential V(r) = (m-ω)·W(√(m-ω)·r).

    Arguments:
        potential: The Schrödinger potential W.
        m: The mass.
        omega: The frequency in (0, m).
        grid: The radial grid to resample on, the closed form is kept when omitted.

    Returns:
        The Dirac potential V.

    Raises:
        ValueError: When ω is outside (0, m).

    """
    if not 0 < omega < m:
        raise ValueError(f"ω = {omega} is outside (0, {m})")

    scaled = potential.scaled(m - omega)
    logger.debug("Scaled %s to %s", potential, scaled)
    if grid is None:
        return scaled
    return TabulatedPotential(grid, scaled.sample(grid))
