#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The tabulated nonlinearity f with f(F(r)) = V(r)."""

import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.interpolate import PchipInterpolator

from solitonlab.exception import BuilderError, NonMonotoneInputError
from solitonlab.radial import RadialGrid
from solitonlab.utility import ArrayLogging, ReprMixin, config

logger = logging.getLogger(__name__)

EXTENSION_TOLERANCE = 1e-12


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


class NonlinearityTable(ReprMixin):
    """This class defines a monotone piecewise cubic nonlinearity through given knots.

    Above the last knot τ_max the table continues with the constant f(τ_max); arguments
    below 0 evaluate to 0. The table also implements the primitive of the
    :class:`~solitonlab.nonlinearity.Nonlinearity` protocol.

    Arguments:
        knots: Strictly increasing knots starting at 0.
        values: Strictly increasing values starting at 0.
        rule: The interpolation rule tag.

    Raises:
        NonMonotoneInputError: When the knots or values are not strictly increasing from 0.
        ValueError: When the rule is unknown or the lengths differ.

    """

    _repr_attrs = ("rule", "tau_max", "f_max", "knots")

    def __init__(self, knots: np.ndarray, values: np.ndarray, rule: str = "pchip") -> None:
        if rule != "pchip":
            raise ValueError(f'Unknown interpolation rule "{rule}"')
        if len(knots) != len(values) or len(knots) < 2:
            raise ValueError("A nonlinearity table needs at least two knots and equal lengths")

        self.knots = _frozen(knots)
        self.values = _frozen(values)
        self.rule = rule
        for name, array in (("knots", self.knots), ("values", self.values)):
            if array[0] != 0 or not np.all(np.diff(array) > 0):
                raise NonMonotoneInputError(
                    f"Table {name} must start at 0 and increase strictly", name=name
                )

        self._interpolant = PchipInterpolator(self.knots, self.values, extrapolate=False)
        self._antiderivative = self._interpolant.antiderivative()

    @property
    def tau_max(self) -> float:
        """Return the last knot.

        Returns:
            The largest τ covered by the interpolation.

        """
        return float(self.knots[-1])

    @property
    def f_max(self) -> float:
        """Return the value at the last knot, which is also the constant continuation.

        Returns:
            f(τ_max).

        """
        return float(self.values[-1])

    def scaled(self, factor: float) -> "NonlinearityTable":
        """Return the table with all values multiplied by a positive factor.

        Arguments:
            factor: The positive factor.

        Returns:
            The scaled table on the same knots.

        """
        return NonlinearityTable(self.knots, self.values * factor, self.rule)

    def evaluate(self, tau: np.ndarray) -> Tuple[np.ndarray, bool]:
        """Evaluate f and report whether the constant continuation was used.

        Arguments:
            tau: The arguments.

        Returns:
            The values and whether any argument exceeded τ_max beyond rounding.

        """
        tau = np.asarray(tau, dtype=np.float64)
        clipped = np.clip(tau, 0.0, self.tau_max)
        result = self._interpolant(clipped)

        index = np.minimum(np.searchsorted(self.knots, clipped), len(self.knots) - 1)
        exact = self.knots[index] == clipped
        result[exact] = self.values[index[exact]]

        extended = bool(np.any(tau > self.tau_max * (1 + EXTENSION_TOLERANCE)))
        return result, extended

    def __call__(self, tau: np.ndarray) -> np.ndarray:
        values, extended = self.evaluate(tau)
        if extended:
            logger.warning(
                "Nonlinearity evaluated above τ_max = %.6g, constant continuation used",
                self.tau_max,
            )
        return values

    def primitive(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate G(τ) = ∫_0^τ f(s) ds.

        Arguments:
            tau: The nonnegative arguments.

        Returns:
            The integrals, with the shape of ``tau``.

        """
        tau = np.asarray(tau, dtype=np.float64)
        clipped = np.clip(tau, 0.0, self.tau_max)
        excess = np.maximum(tau - self.tau_max, 0.0)
        return self._antiderivative(clipped) + self.f_max * excess  # type: ignore[no-any-return]

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the table metadata to a python dict.

        Returns:
            A python dict with the rule, the knot count, τ_max and f(τ_max).

        """
        return {
            "rule": self.rule,
            "knot_count": len(self.knots),
            "tau_max": self.tau_max,
            "f_max": self.f_max,
        }


def _first_violation(density: np.ndarray, potential: np.ndarray) -> Optional[int]:
    decreasing = (density[1:] < density[:-1]) & (potential[1:] < potential[:-1])
    positive = (density[1:] > 0) & (potential[1:] > 0)
    bad = np.flatnonzero(~(decreasing & positive))
    return int(bad[0]) + 1 if bad.size else None


def build_nonlinearity(
    density: np.ndarray,
    potential: np.ndarray,
    grid: RadialGrid,
    noise_floor: Optional[float] = None,
) -> NonlinearityTable:
    """Invert F ↦ V into a monotone table f with f(F(r_i)) = V(r_i) at every kept node.

    Knots are F(r_i) in increasing order with the knot (0, 0) prepended. Tail nodes from
    the first monotonicity violation on are dropped when F or V is below the noise floor
    there.

    Arguments:
        density: The samples of F on the grid nodes.
        potential: The samples of V on the grid nodes.
        grid: The radial grid.
        noise_floor: The relative noise floor, defaults to ``config.noise_floor``.

    Returns:
        The nonlinearity table.

    Raises:
        NonMonotoneInputError: When F or V fails strict monotonicity above the noise floor.
        BuilderError: When the table is not exact at its knots.

    """
    if noise_floor is None:
        noise_floor = config.noise_floor

    density = np.asarray(density, dtype=np.float64)
    potential = np.asarray(potential, dtype=np.float64)
    nodes = grid.nodes
    density_floor = noise_floor * np.max(density)
    potential_floor = noise_floor * np.max(potential)
    if not (density[0] > density_floor and potential[0] > potential_floor):
        raise NonMonotoneInputError(
            "F and V must be positive at the origin", name="F", radius=0.0
        )

    kept = len(density)
    violation = _first_violation(density, potential)
    if violation is not None:
        if density[violation] > density_floor and potential[violation] > potential_floor:
            name = "F" if density[violation] >= density[violation - 1] else "V"
            raise NonMonotoneInputError(name=name, radius=float(nodes[violation]))
        kept = violation
        logger.warning(
            "Dropped %d tail knots below the noise floor from r = %.6g",
            len(density) - kept,
            nodes[kept],
        )

    knots = np.concatenate(([0.0], density[:kept][::-1]))
    values = np.concatenate(([0.0], potential[:kept][::-1]))
    table = NonlinearityTable(knots, values)

    if not np.array_equal(table(density[:kept]), potential[:kept]):
        raise BuilderError("The nonlinearity table is not exact at its knots")
    logger.info("%s", ArrayLogging("nonlinearity knots", table.knots))
    return table
