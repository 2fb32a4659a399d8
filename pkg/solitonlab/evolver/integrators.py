#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Spectral split-step integrators for the 1D NLS and NLKG equations.

The equations are::

    i∂_t u = -∂_x²u + α(|u|²)u                  (NLS)
    ∂_t²u = ∂_x²u - m²u - α(|u|²)u              (NLKG)

"""

import logging
from typing import Any, Dict, List, Optional

import numpy as np

from solitonlab.evolver.trajectory import PeriodicGrid, Trajectory1D
from solitonlab.exception import BlowUpError
from solitonlab.nonlinearity import Nonlinearity
from solitonlab.utility import ArrayLogging, config

logger = logging.getLogger(__name__)


def step_count(dt: float, t_final: float, stride: int) -> int:
    """Return the number of time steps of an evolution.

    Arguments:
        dt: The time step Δt > 0.
        t_final: The final time T ≥ 0, a multiple of Δt.
        stride: The number of steps between snapshots.

    Returns:
        T/Δt, a multiple of the stride.

    Raises:
        ValueError: When the step, the final time or the stride is invalid.

    """
    if not dt > 0 or t_final < 0:
        raise ValueError("Evolution needs Δt > 0 and T ≥ 0")
    if stride < 1:
        raise ValueError("The snapshot stride must be positive")

    steps = int(round(t_final / dt))
    if abs(steps * dt - t_final) > 1e-9 * max(t_final, dt):
        raise ValueError(f"T = {t_final} is not a multiple of Δt = {dt}")
    if steps % stride:
        raise ValueError(f"{steps} steps are not a multiple of the stride {stride}")
    return steps


def _guard(u: np.ndarray, time: float, limit: float) -> None:
    sup_norm = float(np.abs(u).max()) if u.size else 0.0
    if not sup_norm <= limit:
        raise BlowUpError(time=time, sup_norm=sup_norm)


def mass(u: np.ndarray, grid: PeriodicGrid) -> float:
    """Return the mass ∫|u|² dx.

    Arguments:
        u: The field samples.
        grid: The periodic grid.

    Returns:
        The mass.

    """
    return grid.integrate(np.abs(u) ** 2)


def energy_nlkg(
    u: np.ndarray, v: np.ndarray, grid: PeriodicGrid, m: float, alpha: Nonlinearity
) -> float:
    """Return the NLKG energy ∫(|∂_t u|² + |∂_x u|² + m²|u|² + G(|u|²)) dx with G' = α.

    Arguments:
        u: The field samples.
        v: The samples of ∂_t u.
        grid: The periodic grid.
        m: The mass.
        alpha: The nonlinearity.

    Returns:
        The energy.

    """
    modulus = np.abs(u) ** 2
    density = (
        np.abs(v) ** 2
        + np.abs(grid.gradient(u)) ** 2
        + m**2 * modulus
        + alpha.primitive(modulus)
    )
    return grid.integrate(density)


def evolve_nls(  # pylint: disable=too-many-arguments
    u0: np.ndarray,
    grid: PeriodicGrid,
    alpha: Nonlinearity,
    dt: float,
    t_final: float,
    stride: int = 1,
    blow_up_limit: Optional[float] = None,
) -> Trajectory1D:
    """Evolve the NLS equation by Strang splitting.

    Each step rotates the phase by e^{-iα(|u|²)Δt/2}, which keeps |u| and hence the
    rotation exact, applies the exact linear multiplier e^{-ik²Δt} in Fourier space, and
    rotates the phase again.

    Arguments:
        u0: The initial data on the grid nodes.
        grid: The periodic grid.
        alpha: The nonlinearity.
        dt: The time step.
        t_final: The final time, a multiple of stride·Δt.
        stride: The number of steps between snapshots.
        blow_up_limit: The sup norm limit, defaults to ``config.blow_up_limit``.

    Returns:
        The trajectory with snapshots at t = 0, stride·Δt, ..., T.

    Raises:
        ValueError: When the step parameters are inconsistent.
        BlowUpError: When the sup norm exceeds the limit.

    """
    if blow_up_limit is None:
        blow_up_limit = config.blow_up_limit

    steps = step_count(dt, t_final, stride)
    multiplier = np.exp(-1j * grid.wavenumbers**2 * dt)
    u = np.array(u0, dtype=np.complex128)
    _guard(u, 0.0, blow_up_limit)

    snapshots: List[np.ndarray] = [u.copy()]
    for index in range(1, steps + 1):
        u *= np.exp(-0.5j * dt * alpha(np.abs(u) ** 2))
        u = np.fft.ifft(multiplier * np.fft.fft(u))
        u *= np.exp(-0.5j * dt * alpha(np.abs(u) ** 2))
        _guard(u, index * dt, blow_up_limit)
        if index % stride == 0:
            snapshots.append(u.copy())

    trajectory = Trajectory1D(grid, dt, stride, np.array(snapshots), model="nls")
    logger.info("NLS run finished, %s", ArrayLogging("u(T)", u))
    return trajectory


def evolve_nlkg(  # pylint: disable=too-many-arguments
    u0: np.ndarray,
    v0: np.ndarray,
    grid: PeriodicGrid,
    m: float,
    alpha: Nonlinearity,
    dt: float,
    t_final: float,
    stride: int = 1,
    blow_up_limit: Optional[float] = None,
) -> Trajectory1D:
    """Evolve the NLKG equation as a first order system by kick-rotate-kick splitting.

    The linear part rotates each Fourier mode exactly with frequency √(m² + k²), the
    nonlinear part kicks ∂_t u by -α(|u|²)u·Δt/2 before and after the rotation.

    Arguments:
        u0: The initial data on the grid nodes.
        v0: The initial ∂_t u on the grid nodes.
        grid: The periodic grid.
        m: The mass.
        alpha: The nonlinearity.
        dt: The time step, at most ``config.cfl_number``·Δx.
        t_final: The final time, a multiple of stride·Δt.
        stride: The number of steps between snapshots.
        blow_up_limit: The sup norm limit, defaults to ``config.blow_up_limit``.

    Returns:
        The trajectory with u and ∂_t u snapshots.

    Raises:
        ValueError: When Δt violates the CFL guard or the step parameters are inconsistent.
        BlowUpError: When the sup norm exceeds the limit.

    """
    if blow_up_limit is None:
        blow_up_limit = config.blow_up_limit
    if dt > config.cfl_number * grid.delta:
        raise ValueError(
            f"Δt = {dt} exceeds the CFL guard {config.cfl_number}·Δx = "
            f"{config.cfl_number * grid.delta}"
        )

    steps = step_count(dt, t_final, stride)
    frequency = np.sqrt(m**2 + grid.wavenumbers**2)
    cosine = np.cos(frequency * dt)
    sine = np.sin(frequency * dt)

    u = np.array(u0, dtype=np.complex128)
    v = np.array(v0, dtype=np.complex128)
    _guard(u, 0.0, blow_up_limit)

    u_snapshots: List[np.ndarray] = [u.copy()]
    v_snapshots: List[np.ndarray] = [v.copy()]
    for index in range(1, steps + 1):
        v -= 0.5 * dt * alpha(np.abs(u) ** 2) * u
        u_hat = np.fft.fft(u)
        v_hat = np.fft.fft(v)
        u = np.fft.ifft(cosine * u_hat + sine / frequency * v_hat)
        v = np.fft.ifft(cosine * v_hat - frequency * sine * u_hat)
        v -= 0.5 * dt * alpha(np.abs(u) ** 2) * u
        _guard(u, index * dt, blow_up_limit)
        if index % stride == 0:
            u_snapshots.append(u.copy())
            v_snapshots.append(v.copy())

    metadata: Dict[str, Any] = {"m": m}
    trajectory = Trajectory1D(
        grid,
        dt,
        stride,
        np.array(u_snapshots),
        np.array(v_snapshots),
        model="nlkg",
        metadata=metadata,
    )
    logger.info("NLKG run finished, %s", ArrayLogging("u(T)", u))
    return trajectory


def mass_drift(trajectory: Trajectory1D) -> float:
    """Return the largest relative mass change over the snapshots.

    Arguments:
        trajectory: The trajectory.

    Returns:
        max_k |M(t_k) - M(0)| / M(0), 0 for zero data.

    """
    masses = np.array([mass(u, trajectory.grid) for u in trajectory.u])
    if masses[0] == 0:
        return 0.0
    return float(np.abs(masses - masses[0]).max() / masses[0])


def energy_drift(trajectory: Trajectory1D, m: float, alpha: Nonlinearity) -> float:
    """Return the largest relative NLKG energy change over the snapshots.

    Arguments:
        trajectory: A trajectory with ∂_t u snapshots.
        m: The mass.
        alpha: The nonlinearity.

    Returns:
        max_k |E(t_k) - E(0)| / E(0), 0 for zero data.

    Raises:
        ValueError: When the trajectory has no ∂_t u snapshots.

    """
    if trajectory.v is None:
        raise ValueError("The energy needs ∂_t u snapshots")

    energies = np.array(
        [
            energy_nlkg(u, v, trajectory.grid, m, alpha)
            for u, v in zip(trajectory.u, trajectory.v)
        ]
    )
    if energies[0] == 0:
        return 0.0
    return float(np.abs(energies - energies[0]).max() / abs(energies[0]))
