#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The uniform radial grid with quadrature and parity-aware finite differences."""

from typing import Dict, Type, TypeVar, Union

import numpy as np
from scipy.integrate import simpson
from tensorbay.utility import AttrsMixin, attr, common_loads
from typing_extensions import Literal

from solitonlab.utility import ReprMixin

Parity = Literal["even", "odd"]


class RadialGrid(AttrsMixin, ReprMixin):
    """This class defines the nodes r_i = iΔr, i = 0..n_r, of a radial grid.

    Arguments:
        r_max: The last node.
        n_r: The number of intervals.

    Raises:
        ValueError: When r_max ≤ 0 or n_r < 4.

    """

    _T = TypeVar("_T", bound="RadialGrid")

    _repr_attrs = ("r_max", "n_r")

    r_max: float = attr()
    n_r: int = attr()

    def __init__(self, r_max: float, n_r: int) -> None:
        if not r_max > 0:
            raise ValueError("r_max must be positive")
        if n_r < 4:
            raise ValueError("A radial grid needs at least 4 intervals")

        self.r_max = float(r_max)
        self.n_r = int(n_r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RadialGrid):
            return NotImplemented
        return (self.r_max, self.n_r) == (other.r_max, other.n_r)

    def __hash__(self) -> int:
        return hash((self.r_max, self.n_r))

    @property
    def delta(self) -> float:
        """Return the spacing Δr.

        Returns:
            r_max / n_r.

        """
        return self.r_max / self.n_r

    @property
    def nodes(self) -> np.ndarray:
        """Return the nodes.

        Returns:
            The n_r + 1 nodes from 0 to r_max.

        """
        return np.linspace(0.0, self.r_max, self.n_r + 1)

    def refined(self, factor: int = 2) -> "RadialGrid":
        """Return the grid with the spacing divided by an integer factor.

        Arguments:
            factor: The refinement factor.

        Returns:
            The refined grid on the same interval.

        """
        return RadialGrid(self.r_max, self.n_r * factor)

    def integrate(self, values: np.ndarray, n: int = 3) -> float:
        """Integrate samples against the radial measure r^{n-1} dr with Simpson's rule.

        Arguments:
            values: The samples on the nodes.
            n: The spatial dimension.

        Returns:
            The integral over [0, r_max].

        """
        return float(simpson(values * self.nodes ** (n - 1), x=self.nodes))

    def derivative(self, values: np.ndarray, parity: Parity) -> np.ndarray:
        """Differentiate samples by centered differences.

        The value at r = 0 uses a ghost node given by the parity of the sampled function
        under r → -r, the value at r_max a one-sided second order stencil.

        Arguments:
            values: The samples on the nodes.
            parity: "even" or "odd".

        Returns:
            The derivative samples.

        """
        h = self.delta
        result = np.empty_like(values)
        result[1:-1] = (values[2:] - values[:-2]) / (2 * h)
        result[0] = 0.0 if parity == "even" else values[1] / h
        result[-1] = (3 * values[-1] - 4 * values[-2] + values[-3]) / (2 * h)
        return result

    def quotient(self, values: np.ndarray) -> np.ndarray:
        """Return values/r for samples of an odd function, with the limit f'(0) at r = 0.

        Arguments:
            values: The samples of an odd function on the nodes.

        Returns:
            The quotient samples.

        """
        result = np.empty_like(values)
        result[1:] = values[1:] / self.nodes[1:]
        result[0] = values[1] / self.delta
        return result

    @classmethod
    def from_pyobj(cls: Type[_T], contents: Dict[str, Union[int, float]]) -> _T:
        """Create a :class:`RadialGrid` instance from python dict.

        Arguments:
            contents: A python dict of the form {"r_max": <float>, "n_r": <int>}.

        Returns:
            A :class:`RadialGrid` instance created from the input python dict.

        """
        return common_loads(cls, contents)

    def to_pyobj(self) -> Dict[str, Union[int, float]]:
        """Dump the instance to a python dict.

        Returns:
            A python dict of the form {"r_max": <float>, "n_r": <int>}.

        """
        return self._dumps()  # type: ignore[no-any-return]


def count_nodes(values: np.ndarray, noise_floor: float) -> int:
    """Count the sign changes of samples above a relative noise floor.

    Arguments:
        values: The samples.
        noise_floor: Samples with magnitude below noise_floor·max|values| are skipped.

    Returns:
        The number of sign changes.

    """
    magnitude = np.abs(values)
    if magnitude.size == 0 or not magnitude.max() > 0:
        return 0
    signs = np.sign(values[magnitude > noise_floor * magnitude.max()])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
