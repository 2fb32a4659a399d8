#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The implementation of the (x, ω) grid and the gridded distributions sampled on it."""

import math
from typing import Callable, Dict, Optional, Tuple, Type, TypeVar, Union

import numpy as np
from tensorbay.utility import AttrsMixin, attr, common_loads

from solitonlab.utility import ReprMixin, config

_Number = Union[int, float]


class Grid2(AttrsMixin, ReprMixin):
    """This class defines a uniform grid on an x interval times an ω interval.

    Arguments:
        x_min: The first x node.
        x_max: The last x node.
        n_x: The number of x nodes.
        omega_min: The first ω node.
        omega_max: The last ω node.
        n_omega: The number of ω nodes.

    Raises:
        ValueError: When a node count is below 2 or an interval is empty.

    """

    _T = TypeVar("_T", bound="Grid2")

    _repr_attrs: Tuple[str, ...] = ("x_min", "x_max", "n_x", "omega_min", "omega_max", "n_omega")

    x_min: float = attr()
    x_max: float = attr()
    n_x: int = attr()
    omega_min: float = attr()
    omega_max: float = attr()
    n_omega: int = attr()

    def __init__(  # pylint: disable=too-many-arguments
        self,
        x_min: _Number,
        x_max: _Number,
        n_x: int,
        omega_min: _Number,
        omega_max: _Number,
        n_omega: int,
    ) -> None:
        if n_x < 2 or n_omega < 2:
            raise ValueError("A grid needs at least 2 nodes per axis")
        if not (x_max > x_min and omega_max > omega_min):
            raise ValueError("Grid intervals must have positive length")

        self.x_min = float(x_min)
        self.x_max = float(x_max)
        self.n_x = int(n_x)
        self.omega_min = float(omega_min)
        self.omega_max = float(omega_max)
        self.n_omega = int(n_omega)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid2):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> Tuple[float, float, int, float, float, int]:
        return (self.x_min, self.x_max, self.n_x, self.omega_min, self.omega_max, self.n_omega)

    @property
    def delta_x(self) -> float:
        """Return the x spacing.

        Returns:
            (x_max - x_min) / (n_x - 1).

        """
        return (self.x_max - self.x_min) / (self.n_x - 1)

    @property
    def delta_omega(self) -> float:
        """Return the ω spacing.

        Returns:
            (omega_max - omega_min) / (n_omega - 1).

        """
        return (self.omega_max - self.omega_min) / (self.n_omega - 1)

    @property
    def x_axis(self) -> np.ndarray:
        """Return the x nodes.

        Returns:
            The x nodes as a float array.

        """
        return np.linspace(self.x_min, self.x_max, self.n_x)

    @property
    def omega_axis(self) -> np.ndarray:
        """Return the ω nodes.

        Returns:
            The ω nodes as a float array.

        """
        return np.linspace(self.omega_min, self.omega_max, self.n_omega)

    @property
    def shape(self) -> Tuple[int, int]:
        """Return the sample array shape.

        Returns:
            The tuple (n_x, n_omega).

        """
        return self.n_x, self.n_omega

    def is_symmetric(self) -> bool:
        """Whether the ω axis is symmetric about 0.

        Returns:
            ``True`` when omega_min = -omega_max up to rounding.

        """
        scale = max(abs(self.omega_min), abs(self.omega_max))
        return math.isclose(self.omega_min, -self.omega_max, rel_tol=0.0, abs_tol=1e-12 * scale)

    def doubled(self) -> "Grid2":
        """Return the grid of a partial convolution on this grid.

        Returns:
            The grid with the same x axis, ω axis [2 omega_min, 2 omega_max] and 2 n_omega - 1
            nodes, so that the ω spacing is unchanged.

        """
        return Grid2(
            self.x_min,
            self.x_max,
            self.n_x,
            2 * self.omega_min,
            2 * self.omega_max,
            2 * self.n_omega - 1,
        )

    @classmethod
    def from_pyobj(cls: Type[_T], contents: Dict[str, _Number]) -> _T:
        """Create a :class:`Grid2` instance from python dict.

        Arguments:
            contents: A python dict containing all the information of the grid::

                    {
                        "x_min": <float>
                        "x_max": <float>
                        "n_x": <int>
                        "omega_min": <float>
                        "omega_max": <float>
                        "n_omega": <int>
                    }

        Returns:
            A :class:`Grid2` instance created from the input python dict.

        """
        return common_loads(cls, contents)

    def to_pyobj(self) -> Dict[str, _Number]:
        """Dump the instance to a python dict.

        Returns:
            A python dict containing all the information of the grid.

        """
        return self._dumps()  # type: ignore[no-any-return]


class GriddedDistribution(ReprMixin):
    """This class defines complex samples of a distribution on a :class:`Grid2`.

    Samples with modulus at most ``support_threshold`` are treated as zero by every
    support operation.

    Arguments:
        grid: The sampling grid.
        values: The complex samples indexed (i_x, i_omega).
        support_threshold: The modulus at or below which a sample is outside the support.

    Raises:
        ValueError: When the sample shape does not match the grid or the threshold is
            negative.

    """

    _repr_attrs = ("grid", "values", "support_threshold")
    _repr_maxlevel = 2

    def __init__(
        self, grid: Grid2, values: np.ndarray, support_threshold: float = 0.0
    ) -> None:
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != grid.shape:
            raise ValueError(f"Sample shape {values.shape} does not match grid shape {grid.shape}")
        if not support_threshold >= 0:
            raise ValueError("The support threshold must be nonnegative")

        values.setflags(write=False)
        self.grid = grid
        self.values = values
        self.support_threshold = float(support_threshold)

    @classmethod
    def from_function(
        cls,
        grid: Grid2,
        function: Callable[[np.ndarray, np.ndarray], np.ndarray],
        support_threshold: float = 0.0,
    ) -> "GriddedDistribution":
        """Sample a function of (x, ω) on a grid.

        Arguments:
            grid: The sampling grid.
            function: A vectorized function of the broadcast x and ω meshes.
            support_threshold: The support threshold.

        Returns:
            The sampled distribution.

        """
        x_mesh, omega_mesh = np.meshgrid(grid.x_axis, grid.omega_axis, indexing="ij")
        values = np.broadcast_to(function(x_mesh, omega_mesh), grid.shape)
        return cls(grid, np.array(values, dtype=np.complex128), support_threshold)

    def with_relative_threshold(self, relative: Optional[float] = None) -> "GriddedDistribution":
        """Return the same samples with a threshold relative to the largest modulus.

        Arguments:
            relative: The relative threshold, ``config.support_relative_threshold`` when
                not given.

        Returns:
            The distribution with threshold ``relative * max|values|``.

        """
        if relative is None:
            relative = config.support_relative_threshold

        peak = float(np.max(np.abs(self.values))) if self.values.size else 0.0
        return GriddedDistribution(self.grid, self.values, relative * peak)

    @property
    def support_mask(self) -> np.ndarray:
        """Return the boolean mask of samples inside the support.

        Returns:
            ``|values| > support_threshold`` as a boolean array.

        """
        return np.abs(self.values) > self.support_threshold  # type: ignore[no-any-return]

    def cleaned(self) -> np.ndarray:
        """Return the samples with everything outside the support set to exact zero.

        Returns:
            A new complex array.

        """
        return np.where(self.support_mask, self.values, 0.0)
