#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Support edge functions and their semicontinuous envelopes.

An edge function assigns to every x node an element of the extended reals. The
envelopes regularize it over the 3-point stencil {i-1, i, i+1} clipped to the axis,
which is the discrete form of the maximal lower semicontinuous minorant and the
minimal upper semicontinuous majorant.

"""

from typing import Tuple

import numpy as np
from scipy.ndimage import maximum_filter1d, minimum_filter1d

from solitonlab.exception import GridMismatchError
from solitonlab.support.grid import GriddedDistribution
from solitonlab.utility import ReprMixin

_STENCIL = 3


class EdgeFunction(ReprMixin):
    """This class defines a function from the x nodes to the extended reals.

    Arguments:
        x_axis: The x nodes.
        values: The per-node values, ``inf`` and ``-inf`` allowed.

    Raises:
        ValueError: When the shapes differ or a value is NaN.

    """

    _repr_attrs = ("x_axis", "values")

    def __init__(self, x_axis: np.ndarray, values: np.ndarray) -> None:
        x_axis = np.asarray(x_axis, dtype=np.float64)
        values = np.asarray(values, dtype=np.float64)
        if x_axis.ndim != 1 or values.shape != x_axis.shape:
            raise ValueError("An edge function needs one value per x node")
        if np.isnan(values).any():
            raise ValueError("Edge function values must not be NaN")

        self.x_axis = x_axis
        self.values = values

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: "EdgeFunction") -> "EdgeFunction":
        self._check_axis(other)
        with np.errstate(invalid="raise"):
            return EdgeFunction(self.x_axis, self.values + other.values)

    def __neg__(self) -> "EdgeFunction":
        return EdgeFunction(self.x_axis, -self.values)

    def _check_axis(self, other: "EdgeFunction") -> None:
        if len(self) != len(other) or not np.array_equal(self.x_axis, other.x_axis):
            raise GridMismatchError(left=len(self), right=len(other))

    @property
    def finite(self) -> np.ndarray:
        """Return the mask of finite values.

        Returns:
            A boolean array.

        """
        return np.isfinite(self.values)  # type: ignore[no-any-return]


def lower_envelope(mu: EdgeFunction) -> EdgeFunction:
    """Return the stencil minimum of an edge function.

    Arguments:
        mu: The edge function.

    Returns:
        The lower envelope, the minimum over {i-1, i, i+1} clipped to the axis.

    """
    return EdgeFunction(mu.x_axis, minimum_filter1d(mu.values, _STENCIL, mode="nearest"))


def upper_envelope(mu: EdgeFunction) -> EdgeFunction:
    """Return the stencil maximum of an edge function.

    Arguments:
        mu: The edge function.

    Returns:
        The upper envelope, the maximum over {i-1, i, i+1} clipped to the axis.

    """
    return EdgeFunction(mu.x_axis, maximum_filter1d(mu.values, _STENCIL, mode="nearest"))


def oscillation(mu: EdgeFunction) -> np.ndarray:
    """Return the oscillation of an edge function over one stencil.

    Arguments:
        mu: The edge function.

    Returns:
        Per node the difference of the upper and lower envelopes, ``inf`` where the stencil
        holds a non-finite value.

    """
    upper = upper_envelope(mu).values
    lower = lower_envelope(mu).values
    finite = np.isfinite(upper) & np.isfinite(lower)
    return np.where(finite, upper - lower, np.inf)  # type: ignore[no-any-return]


def support_edge_indices(f: GriddedDistribution) -> Tuple[np.ndarray, np.ndarray]:
    """Return the ω indices of the first and last support samples of every column.

    Arguments:
        f: The gridded distribution.

    Returns:
        The first and last indices as integer arrays, both -1 on empty columns.

    """
    mask = f.support_mask
    nonempty = mask.any(axis=1)
    first = np.argmax(mask, axis=1)
    last = mask.shape[1] - 1 - np.argmax(mask[:, ::-1], axis=1)
    return np.where(nonempty, first, -1), np.where(nonempty, last, -1)


def support_edges(f: GriddedDistribution) -> Tuple[EdgeFunction, EdgeFunction]:
    """Return the lower and upper support edges a_f and b_f.

    Arguments:
        f: The gridded distribution.

    Returns:
        The edge functions (a, b): a is the smallest and b the largest support ω of each
        column, with a = inf and b = -inf on empty columns.

    """
    first, last = support_edge_indices(f)
    omega = f.grid.omega_axis
    nonempty = first >= 0
    a = np.where(nonempty, omega[np.maximum(first, 0)], np.inf)
    b = np.where(nonempty, omega[np.maximum(last, 0)], -np.inf)
    x_axis = f.grid.x_axis
    return EdgeFunction(x_axis, a), EdgeFunction(x_axis, b)


def sigma(f: GriddedDistribution) -> np.ndarray:
    """Return the x indices of the nonempty columns, the projection of the support.

    Arguments:
        f: The gridded distribution.

    Returns:
        The sorted x indices of the columns with at least one support sample.

    """
    return np.flatnonzero(f.support_mask.any(axis=1))
