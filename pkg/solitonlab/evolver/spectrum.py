#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Time spectra of trajectories at probe positions and the |u|² diagnostics.

The spectrum of the snapshots u_k = u(x, kΔt_s), k = 0..N-1 with N odd, is sampled on
the symmetric axis ω_j = j·2π/(NΔt_s), j = -(N-1)/2..(N-1)/2::

    ũ(ω_j) = Δt_s Σ_k w_k u_k e^{iω_j t_k}

with the periodic Hann window w. A tone e^{-iω₀t} with ω₀ on the axis occupies
exactly the three bins around ω₀.

With a frequency hint ω₀ the window w(t) = sin²(πt/T_w) instead spans the largest whole
number of periods T_w = k·2π/|ω₀| in the record and the axis step is 2π/T_w, so ω₀ lies on
the axis whatever the snapshot spacing. The sum is then evaluated with a chirp z-transform.

"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.signal import czt, find_peaks, get_window

from solitonlab.evolver.trajectory import Trajectory1D
from solitonlab.exception import TooFewSnapshotsError
from solitonlab.support import (
    Grid2,
    GriddedDistribution,
    TitchmarshReport,
    check_titchmarsh_partial,
    edge_list,
    partial_convolution,
    sharp,
)
from solitonlab.utility import ArrayLogging, ReprMixin, config, write_csv

logger = logging.getLogger(__name__)

_PathLike = Union[str, Path]

MIN_SNAPSHOTS = 16
WINDOW = "hann"
MATCHED_WINDOW = "hann-matched"
PARSEVAL_TOLERANCE = 1e-8
VARIANCE_FLOOR = 1e-6


class SpectrumProbe(ReprMixin):
    """This class defines the windowed time spectra of a trajectory at probe positions.

    Arguments:
        positions: The probe positions, snapped to grid nodes.
        omega: The symmetric ω axis.
        values: The spectra with shape (probes, omega).
        parseval_error: The largest relative Parseval mismatch of the unwindowed transform.
        window: The window tag.

    """

    _repr_attrs = ("window", "positions", "delta_omega", "parseval_error")

    def __init__(
        self,
        positions: np.ndarray,
        omega: np.ndarray,
        values: np.ndarray,
        parseval_error: float,
        window: str = WINDOW,
    ) -> None:
        self.positions = positions
        self.omega = omega
        self.values = values
        self.parseval_error = parseval_error
        self.window = window

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def delta_omega(self) -> float:
        """Return the ω bin width.

        Returns:
            The spacing of the ω axis.

        """
        return float(self.omega[1] - self.omega[0])

    def edges(self, relative: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
        """Return the support edges of every probe spectrum with the window mainlobe removed.

        A sample belongs to the support when its modulus exceeds ``relative`` times the
        largest modulus of the same probe. The Hann mainlobe widens a tone by one bin on
        each side, so edges at least two bins apart are moved one bin inwards.

        Arguments:
            relative: The relative threshold, defaults to ``config.support_relative_threshold``.

        Returns:
            The lower and upper edges per probe, ``inf`` and ``-inf`` for a zero spectrum.

        """
        if relative is None:
            relative = config.support_relative_threshold

        delta = self.delta_omega
        lower = np.full(len(self), np.inf)
        upper = np.full(len(self), -np.inf)
        for index, spectrum in enumerate(np.abs(self.values)):
            peak = spectrum.max()
            if peak == 0:
                continue
            support = np.flatnonzero(spectrum > relative * peak)
            a, b = self.omega[support[0]], self.omega[support[-1]]
            if b - a >= 2 * delta * (1 - 1e-9):
                a, b = a + delta, b - delta
            lower[index], upper[index] = a, b
        return lower, upper

    def single_bin(self, relative: Optional[float] = None) -> np.ndarray:
        """Return which probes carry a single-bin spectrum.

        Arguments:
            relative: The relative threshold of :meth:`edges`.

        Returns:
            A boolean array, ``True`` where b - a is at most one bin.

        """
        lower, upper = self.edges(relative)
        return (upper - lower) <= self.delta_omega * (1 + 1e-9)  # type: ignore[no-any-return]

    def peaks(self, index: int, relative: float = 1e-3) -> np.ndarray:
        """Return the ω positions of the spectral peaks of one probe.

        Arguments:
            index: The probe index.
            relative: The smallest peak height relative to the largest modulus.

        Returns:
            The peak frequencies in increasing order.

        """
        spectrum = np.abs(self.values[index])
        found, _ = find_peaks(spectrum, height=relative * spectrum.max())
        return self.omega[found]  # type: ignore[no-any-return]

    def save_csv(self, path: _PathLike) -> None:
        """Save the spectra as a CSV table with ω and a real and imaginary column per probe.

        Arguments:
            path: The output path.

        """
        columns: Dict[str, np.ndarray] = {"omega": self.omega}
        for position, spectrum in zip(self.positions, self.values):
            label = f"{position:.17g}"
            columns[f"re({label})"] = spectrum.real
            columns[f"im({label})"] = spectrum.imag
        write_csv(columns, path)

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the probe summary to a python dict.

        Returns:
            A json-able dict with the positions, the ω axis, the edges and the Parseval
            mismatch.

        """
        lower, upper = self.edges()
        return {
            "window": self.window,
            "positions": [float(position) for position in self.positions],
            "omega_min": float(self.omega[0]),
            "omega_max": float(self.omega[-1]),
            "delta_omega": self.delta_omega,
            "a": edge_list(lower),
            "b": edge_list(upper),
            "parseval_error": self.parseval_error,
        }


def _probe_indices(trajectory: Trajectory1D, probes: Sequence[float]) -> np.ndarray:
    grid = trajectory.grid
    offsets = (np.asarray(probes, dtype=np.float64) + grid.half_length) / grid.delta
    return np.mod(np.rint(offsets).astype(int), grid.n_x)  # type: ignore[no-any-return]


def _transform(samples: np.ndarray, step: float) -> np.ndarray:
    count = samples.shape[-1]
    return np.fft.fftshift(count * step * np.fft.ifft(samples, axis=-1), axes=-1)


def _matched_transform(
    samples: np.ndarray, step: float, frequency: float
) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    period = 2 * np.pi / abs(frequency)
    periods = int(np.floor((samples.shape[-1] - 1) * step / period * (1 + 1e-12)))
    if periods < 1:
        return None

    duration = periods * period
    count = min(int(np.floor(duration / step * (1 + 1e-12))) + 1, samples.shape[-1])
    window = np.sin(np.pi * step * np.arange(count) / duration) ** 2
    delta_omega = 2 * np.pi / duration
    half = int(np.floor(np.pi / (step * delta_omega)))
    values = step * czt(
        samples[:, :count] * window,
        m=2 * half + 1,
        w=np.exp(1j * delta_omega * step),
        a=np.exp(1j * half * delta_omega * step),
        axis=-1,
    )
    return delta_omega * np.arange(-half, half + 1), values


def _uniform(positions: np.ndarray) -> bool:
    if len(positions) < 2:
        return False
    spacing = np.diff(positions)
    return bool(spacing[0] > 0 and np.allclose(spacing, spacing[0], rtol=1e-9, atol=0.0))


def time_spectrum(
    trajectory: Trajectory1D,
    probes: Sequence[float],
    relative: Optional[float] = None,
    frequency: Optional[float] = None,
) -> Tuple[SpectrumProbe, Optional[GriddedDistribution]]:
    """Compute the Hann-windowed time spectra of a trajectory at probe positions.

    An even number of snapshots loses its last snapshot so that the ω axis is symmetric.
    A nonzero frequency hint switches to the window over whole periods of the hint; a
    record shorter than one period falls back to the plain window.

    Arguments:
        trajectory: The trajectory.
        probes: The probe positions, snapped to the nearest grid node.
        relative: The relative support threshold of the distribution, defaults to
            ``config.support_relative_threshold``.
        frequency: The expected frequency ω₀, put on the ω axis when given.

    Returns:
        The spectra, and the distribution over (probe, ω) when there are at least two
        uniformly spaced probes, else ``None``.

    Raises:
        TooFewSnapshotsError: When the trajectory has fewer than 16 snapshots.

    """
    count = len(trajectory)
    if count < MIN_SNAPSHOTS:
        raise TooFewSnapshotsError(
            f"A time spectrum needs {MIN_SNAPSHOTS} snapshots, the trajectory has {count}"
        )
    count -= 1 - count % 2

    indices = _probe_indices(trajectory, probes)
    positions = trajectory.grid.nodes[indices]
    step = trajectory.snapshot_dt
    samples = trajectory.u[:count, indices].T

    plain = _transform(samples, step)
    delta_omega = 2 * np.pi / (count * step)
    energy = step * np.sum(np.abs(samples) ** 2, axis=1)
    spectral = np.sum(np.abs(plain) ** 2, axis=1) * delta_omega / (2 * np.pi)
    scale = np.maximum(energy, np.finfo(np.float64).tiny)
    parseval_error = float(np.max(np.abs(spectral - energy) / scale))
    if parseval_error > PARSEVAL_TOLERANCE:
        logger.warning("Parseval mismatch %.3g of the unwindowed transform", parseval_error)

    matched = None
    if frequency:
        matched = _matched_transform(trajectory.u[:, indices].T, step, frequency)
        if matched is None:
            logger.warning("The record is shorter than one period of ω₀ = %g", frequency)

    if matched is None:
        values = _transform(samples * get_window(WINDOW, count), step)
        half = count // 2
        omega = delta_omega * np.arange(-half, half + 1)
        probe = SpectrumProbe(positions, omega, values, parseval_error)
    else:
        omega, values = matched
        probe = SpectrumProbe(positions, omega, values, parseval_error, MATCHED_WINDOW)
    logger.info("Time spectra of %d probes, %s", len(positions), ArrayLogging("spectra", values))

    if not _uniform(positions):
        return probe, None

    grid = Grid2(positions[0], positions[-1], len(positions), omega[0], omega[-1], len(omega))
    distribution = GriddedDistribution(grid, values).with_relative_threshold(relative)
    return probe, distribution


def modulus_spectrum(
    spectrum: GriddedDistribution,
) -> Tuple[GriddedDistribution, TitchmarshReport]:
    """Compute the time spectrum of |u|² as ũ *_ω ũ♯ / 2π.

    The edges of the result are predicted by a = a_ũ - b_ũ and b = b_ũ - a_ũ; the
    returned report compares them with the measured ones.

    Arguments:
        spectrum: The time spectrum ũ over (probe, ω) from :func:`time_spectrum`.

    Returns:
        The spectrum of |u|² on the doubled ω grid and the Titchmarsh report of the
        convolution.

    """
    reflected = sharp(spectrum)
    convolution = partial_convolution(spectrum, reflected)
    scale = 1 / (2 * np.pi)
    modulus = GriddedDistribution(
        convolution.grid, convolution.values * scale, convolution.support_threshold * scale
    )
    return modulus, check_titchmarsh_partial(spectrum, reflected)


def modulus_variance(trajectory: Trajectory1D) -> np.ndarray:
    """Return per grid node the time variance of |u|² normalized by its squared mean.

    The normalization is max(mean², (10⁻⁶·max mean)²), and nodes where the mean is 0
    report 0.

    Arguments:
        trajectory: The trajectory.

    Returns:
        The normalized variances, one per grid node.

    """
    modulus = np.abs(trajectory.u) ** 2
    mean = modulus.mean(axis=0)
    variance = modulus.var(axis=0)
    peak = mean.max()
    if peak == 0:
        return np.zeros_like(mean)  # type: ignore[no-any-return]

    scale = np.maximum(mean**2, (VARIANCE_FLOOR * peak) ** 2)
    return np.where(mean > 0, variance / scale, 0.0)  # type: ignore[no-any-return]


def variance_spectrum_coupling(
    probe: SpectrumProbe, trajectory: Trajectory1D, relative: Optional[float] = None
) -> List[int]:
    """Return the single-bin probes whose |u|² variance exceeds 10⁻⁶.

    Arguments:
        probe: The spectra of the trajectory.
        trajectory: The trajectory.
        relative: The relative threshold of :meth:`SpectrumProbe.edges`.

    Returns:
        The indices of the violating probes, empty when the coupling holds.

    """
    variance = modulus_variance(trajectory)[_probe_indices(trajectory, probe.positions)]
    violations = probe.single_bin(relative) & (variance > VARIANCE_FLOOR)
    return [int(index) for index in np.flatnonzero(violations)]
