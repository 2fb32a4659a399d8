#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Periodic grids and stored snapshots of 1D evolutions.

Fourier conventions: the forward spatial transform uses e^{-ikx} (``numpy.fft.fft``)
and the time spectrum is ũ(ω) = ∫e^{iωt}u dt, so that u ~ e^{-iω₀t} peaks at ω = ω₀.

"""

from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar, Union

import numpy as np
import pyarrow as pa
from tensorbay.utility import AttrsMixin, attr, common_loads

from solitonlab.utility import (
    ReprMixin,
    attach_metadata,
    complex_array,
    complex_column,
    read_feather,
    read_metadata,
    write_csv,
    write_feather,
)

_PathLike = Union[str, Path]


class PeriodicGrid(AttrsMixin, ReprMixin):
    """This class defines the nodes x_j = -L + jΔx, j = 0..n_x-1, of the periodic box [-L, L).

    Arguments:
        half_length: The half length L.
        n_x: The number of nodes.

    Raises:
        ValueError: When L ≤ 0 or n_x < 4.

    """

    _T = TypeVar("_T", bound="PeriodicGrid")

    _repr_attrs = ("half_length", "n_x")

    half_length: float = attr()
    n_x: int = attr()

    def __init__(self, half_length: float, n_x: int) -> None:
        if not half_length > 0 or n_x < 4:
            raise ValueError("A periodic grid needs L > 0 and at least 4 nodes")
        self.half_length = float(half_length)
        self.n_x = int(n_x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PeriodicGrid):
            return NotImplemented
        return (self.half_length, self.n_x) == (other.half_length, other.n_x)

    def __hash__(self) -> int:
        return hash((self.half_length, self.n_x))

    @property
    def delta(self) -> float:
        """Return the spacing Δx = 2L/n_x.

        Returns:
            The node spacing.

        """
        return 2 * self.half_length / self.n_x

    @property
    def nodes(self) -> np.ndarray:
        """Return the nodes.

        Returns:
            The n_x nodes starting at -L.

        """
        return -self.half_length + self.delta * np.arange(self.n_x)  # type: ignore[no-any-return]

    @property
    def wavenumbers(self) -> np.ndarray:
        """Return the wavenumbers in ``numpy.fft`` order.

        Returns:
            k = 2π·fftfreq(n_x, Δx).

        """
        return 2 * np.pi * np.fft.fftfreq(self.n_x, self.delta)  # type: ignore[no-any-return]

    def integrate(self, values: np.ndarray) -> float:
        """Integrate periodic samples with the trapezoidal (spectrally accurate) rule.

        Arguments:
            values: The samples on the nodes.

        Returns:
            Σ values·Δx.

        """
        return float(np.sum(values) * self.delta)

    def gradient(self, values: np.ndarray) -> np.ndarray:
        """Differentiate periodic samples spectrally.

        Arguments:
            values: The samples on the nodes.

        Returns:
            The derivative samples.

        """
        derivative = np.fft.ifft(1j * self.wavenumbers * np.fft.fft(values))
        return derivative  # type: ignore[no-any-return]

    @classmethod
    def from_pyobj(cls: Type[_T], contents: Dict[str, Union[int, float]]) -> _T:
        """Create a :class:`PeriodicGrid` instance from python dict.

        Arguments:
            contents: A python dict of the form {"half_length": ..., "n_x": ...}.

        Returns:
            The loaded grid.

        """
        return common_loads(cls, contents)

    def to_pyobj(self) -> Dict[str, Union[int, float]]:
        """Dump the grid to a python dict.

        Returns:
            A python dict of the form {"half_length": ..., "n_x": ...}.

        """
        return self._dumps()  # type: ignore[no-any-return]


class Trajectory1D(ReprMixin):
    """This class defines uniformly spaced snapshots of a 1D periodic evolution.

    Arguments:
        grid: The periodic grid.
        dt: The time step.
        stride: The number of steps between snapshots.
        u: The snapshots u(x, t_k) with shape (snapshots, n_x).
        v: The snapshots of ∂_t u for second order equations.
        model: The model tag, "nls" or "nlkg".
        metadata: Extra json-able run parameters.

    """

    _repr_attrs = ("model", "grid", "dt", "stride", "u")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        grid: PeriodicGrid,
        dt: float,
        stride: int,
        u: np.ndarray,
        v: Optional[np.ndarray] = None,
        model: str = "nls",
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        if u.ndim != 2 or u.shape[1] != grid.n_x:
            raise ValueError(f"Snapshot shape {u.shape} does not match {grid.n_x} nodes")
        if v is not None and v.shape != u.shape:
            raise ValueError("The ∂_t u snapshots must match the u snapshots")

        self.grid = grid
        self.dt = float(dt)
        self.stride = int(stride)
        self.u = u
        self.v = v
        self.model = model
        self.metadata = metadata if metadata is not None else {}

    def __len__(self) -> int:
        return len(self.u)

    @property
    def snapshot_dt(self) -> float:
        """Return the time between snapshots.

        Returns:
            stride·Δt.

        """
        return self.stride * self.dt

    @property
    def times(self) -> np.ndarray:
        """Return the snapshot times.

        Returns:
            t_k = k·stride·Δt.

        """
        return self.snapshot_dt * np.arange(len(self.u))  # type: ignore[no-any-return]

    def _header(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "grid": self.grid.to_pyobj(),
            "dt": self.dt,
            "stride": self.stride,
            "snapshots": len(self.u),
            "has_v": self.v is not None,
            "metadata": self.metadata,
        }

    def save_feather(self, path: _PathLike) -> None:
        """Save the snapshots as a Feather file of complex128 pairs.

        Rows are snapshot-major (t_k, x_j); the schema metadata holds the grid, the
        time step, the stride and the model.

        Arguments:
            path: The output path.

        """
        columns = {"u": complex_array(self.u)}
        if self.v is not None:
            columns["v"] = complex_array(self.v)
        write_feather(attach_metadata(pa.table(columns), self._header()), path)

    @classmethod
    def load_feather(cls, path: _PathLike) -> "Trajectory1D":
        """Load snapshots saved by :meth:`save_feather`.

        Arguments:
            path: The input path.

        Returns:
            The loaded trajectory.

        """
        table = read_feather(path)
        header = read_metadata(table)
        grid = PeriodicGrid.from_pyobj(header["grid"])
        shape = (header["snapshots"], grid.n_x)
        u = complex_column(table, "u").reshape(shape)
        v = complex_column(table, "v").reshape(shape) if header["has_v"] else None
        return cls(
            grid, header["dt"], header["stride"], u, v, header["model"], header["metadata"]
        )

    def save_csv(self, path: _PathLike) -> None:
        """Export the snapshots as a long CSV table (t, x, re_u, im_u[, re_v, im_v]).

        Arguments:
            path: The output path.

        """
        snapshots, n_x = self.u.shape
        columns = {
            "t": np.repeat(self.times, n_x),
            "x": np.tile(self.grid.nodes, snapshots),
            "re_u": self.u.real.ravel(),
            "im_u": self.u.imag.ravel(),
        }
        if self.v is not None:
            columns["re_v"] = self.v.real.ravel()
            columns["im_v"] = self.v.imag.ravel()
        write_csv(columns, path)
