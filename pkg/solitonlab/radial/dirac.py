#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The radial Dirac eigen-solver by shooting.

The radial reduction of ωφ = D_mφ - βVφ for φ = [v·n; i·u·σ_r·n] reads::

    v' = -(ω + m - V)·u
    u' = (ω - m + V)·v - (n - 1)·u/r

The regular branch starts from a series expansion at the origin, the decaying branch
from the asymptotics at r_max, and the two are matched at the turning point V = m - ω.

"""

import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from solitonlab.exception import NodeMismatchError, NoEigenvalueError
from solitonlab.radial.grid import RadialGrid, count_nodes
from solitonlab.radial.potential import RadialPotential
from solitonlab.utility import ArrayLogging, ReprMixin, config

logger = logging.getLogger(__name__)

BOUNDARY_TOLERANCE = 1e-10
BRACKET_MARGIN = 1e-6



class RadialEigenpair(ReprMixin):
    """This class defines a normalized radial Dirac eigenpair (ω, v, u).

    Arguments:
        omega: The eigenvalue in (0, m).
        v: The upper profile samples on the grid nodes.
        u: The lower profile samples on the grid nodes.
        node_count: The number of nodes of v.
        grid: The radial grid.
        m: The mass.
        n: The spatial dimension.
        residual: The L² norm of the discretized eigen-residual.

    """

    _repr_attrs = ("omega", "node_count", "residual", "grid", "v", "u")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        omega: float,
        v: np.ndarray,
        u: np.ndarray,
        node_count: int,
        grid: RadialGrid,
        m: float,
        n: int = 3,
        residual: float = float("nan"),
    ) -> None:
        self.omega = float(omega)
        self.v = _frozen(v)
        self.u = _frozen(u)
        self.node_count = node_count
        self.grid = grid
        self.m = m
        self.n = n
        self.residual = residual

    @property
    def boundary_value(self) -> float:
        """Return the largest profile value at r_max relative to the peak of v.

        Returns:
            max(|v(r_max)|, |u(r_max)|) / max|v|.

        """
        return float(max(abs(self.v[-1]), abs(self.u[-1])) / np.abs(self.v).max())

    def inner(self, other: "RadialEigenpair") -> float:
        """Return the L²(r^{n-1}dr) inner product of the profile pairs.

        Arguments:
            other: An eigenpair on the same grid.

        Returns:
            ∫(v·v' + u·u') r^{n-1} dr.

        """
        return self.grid.integrate(self.v * other.v + self.u * other.u, self.n)

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the eigenpair metadata to a python dict.

        Returns:
            A python dict with ω, the node count, residual, mass, dimension and grid.

        """
        return {
            "omega": self.omega,
            "node_count": self.node_count,
            "residual": self.residual,
            "m": self.m,
            "n": self.n,
            "grid": self.grid.to_pyobj(),
        }


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


def radial_residuals(
    potential: RadialPotential,
    m: float,
    omega: float,
    profiles: Tuple[np.ndarray, np.ndarray],
    grid: RadialGrid,
    n: int = 3,
) -> Tuple[np.ndarray, np.ndarray]:
    """Evaluate the radial eigen-residuals by centered differences.

    v is differentiated as an even function and u as an odd one.

    Arguments:
        potential: The Dirac potential V.
        m: The mass.
        omega: The frequency.
        profiles: The samples (v, u) on the grid nodes.
        grid: The radial grid.
        n: The spatial dimension.

    Returns:
        The residuals of u' + (n-1)u/r + (m-V)v - ωv and -v' - (m-V)u - ωu.

    """
    v, u = profiles
    gap = m - potential.sample(grid)
    residual_v = grid.derivative(u, "odd") + (n - 1) * grid.quotient(u) + (gap - omega) * v
    residual_u = -grid.derivative(v, "even") - (gap + omega) * u
    return residual_v, residual_u


def residual_norm(potential: RadialPotential, pair: RadialEigenpair) -> float:
    """Return the L²(r^{n-1}dr) norm of the radial eigen-residuals of an eigenpair.

    Arguments:
        potential: The Dirac potential V.
        pair: The eigenpair.

    Returns:
        The residual norm.

    """
    return _residual_norm(potential, pair.m, pair.omega, (pair.v, pair.u), pair.grid, pair.n)


def _residual_norm(  # pylint: disable=too-many-arguments
    potential: RadialPotential,
    m: float,
    omega: float,
    profiles: Tuple[np.ndarray, np.ndarray],
    grid: RadialGrid,
    n: int,
) -> float:
    residual_v, residual_u = radial_residuals(potential, m, omega, profiles, grid, n)
    return float(np.sqrt(grid.integrate(residual_v**2 + residual_u**2, n)))


class _Shooter:
    """Integrations of the radial Dirac system for one potential."""

    def __init__(self, potential: RadialPotential, m: float, grid: RadialGrid, n: int) -> None:
        self.potential = potential
        self.m = m
        self.grid = grid
        self.n = n
        self.start = 1e-3 * grid.delta

    def _system(self, omega: float) -> Callable[[float, np.ndarray], List[float]]:
        m = self.m
        n = self.n
        potential = self.potential

        def fun(r: float, y: np.ndarray) -> List[float]:
            value = float(potential(r))
            return [-(omega + m - value) * y[1], (omega - m + value) * y[0] - (n - 1) * y[1] / r]

        return fun

    def matching_radius(self, omega: float) -> float:
        """Return the turning point V(r) = m - ω clamped to [5Δr, r_max/2].

        The radius is moved to the nearest half node so that it never coincides with a
        grid node. The sign of the miss function does not depend on it, since
        r^{n-1}·(v₁u₂ - v₂u₁) is constant for two solutions.

        Arguments:
            omega: The frequency.

        Returns:
            The matching radius, r_max/10 without a classically allowed region.

        """
        level = self.m - omega
        h = self.grid.delta
        lower = 5 * h
        upper = self.grid.r_max / 2
        gap_lower = float(self.potential(lower)) - level
        gap_upper = float(self.potential(upper)) - level

        if gap_lower <= 0:
            radius = self.grid.r_max / 10
        elif gap_upper >= 0:
            radius = upper
        else:
            radius = brentq(lambda r: float(self.potential(r)) - level, lower, upper)
        return (np.floor(radius / h) + 0.5) * h

    def _regular_start(self, omega: float) -> List[float]:
        value = float(self.potential(0.0))
        slope = (omega - self.m + value) / self.n
        r = self.start
        return [1 - (omega + self.m - value) * slope * r**2 / 2, slope * r]

    def _decaying_start(self, omega: float) -> List[float]:
        r_max = self.grid.r_max
        value = float(self.potential(r_max))
        kappa = np.sqrt(max((self.m - value) ** 2 - omega**2, 0.0))
        slope = -kappa - (self.n - 1) / (2 * r_max)
        return [1.0, -slope / (omega + self.m - value)]

    def shoot(self, omega: float, rtol: float, sample: bool = False) -> Dict[str, Any]:
        """Integrate both branches up to the matching radius.

        Arguments:
            omega: The frequency.
            rtol: The relative tolerance of the integrations.
            sample: Whether to sample both branches on the grid nodes.

        Returns:
            A dict with the branch end values and optionally the branch samples.

        """
        method = "DOP853" if rtol < config.scan_rtol else "RK45"
        match = self.matching_radius(omega)
        nodes = self.grid.nodes
        outward_nodes = nodes[(nodes > self.start) & (nodes < match)]
        inward_nodes = nodes[nodes >= match][::-1]

        fun = self._system(omega)
        outward = solve_ivp(
            fun,
            (self.start, match),
            self._regular_start(omega),
            method=method,
            t_eval=np.append(outward_nodes, match) if sample else None,
            rtol=rtol,
            atol=config.ode_atol,
        )
        inward = solve_ivp(
            fun,
            (self.grid.r_max, match),
            self._decaying_start(omega),
            method=method,
            t_eval=np.append(inward_nodes, match) if sample else None,
            rtol=rtol,
            atol=config.ode_atol,
        )
        return {
            "match": match,
            "outward": outward.y,
            "inward": inward.y,
        }

    def miss(self, omega: float, rtol: float) -> float:
        """Return the normalized Wronskian of the branches at the matching radius.

        Arguments:
            omega: The frequency.
            rtol: The relative tolerance of the integrations.

        Returns:
            (v_o·u_i - v_i·u_o) / (|(v_o, u_o)|·|(v_i, u_i)|).

        """
        result = self.shoot(omega, rtol)
        outer = result["outward"][:, -1]
        inner = result["inward"][:, -1]
        wronskian = outer[0] * inner[1] - inner[0] * outer[1]
        return float(wronskian / (np.hypot(*outer) * np.hypot(*inner)))

    def profile(self, omega: float) -> Tuple[np.ndarray, np.ndarray]:
        """Assemble the normalized profile (v, u) at a frequency on the grid nodes.

        Arguments:
            omega: The frequency.

        Returns:
            The samples of v and u, with v(0) > 0.

        """
        result = self.shoot(omega, config.ode_rtol, sample=True)
        outward = result["outward"]
        inward = result["inward"]

        outer = outward[:, -1]
        inner = inward[:, -1]
        scale = (outer @ inner) / (inner @ inner)

        v = np.concatenate(([1.0], outward[0, :-1], scale * inward[0, -2::-1]))
        u = np.concatenate(([0.0], outward[1, :-1], scale * inward[1, -2::-1]))
        norm = np.sqrt(self.grid.integrate(v**2 + u**2, self.n))
        return v / norm, u / norm


def _sign_changes(omegas: np.ndarray, misses: np.ndarray) -> List[Tuple[float, float]]:
    signs = np.sign(misses)
    indices = np.flatnonzero(signs[:-1] * signs[1:] < 0)
    return [(float(omegas[i]), float(omegas[i + 1])) for i in indices]


def _widened(
    bracket: Tuple[float, float], omega_guess: float, limits: Tuple[float, float]
) -> Tuple[float, float]:
    low, high = bracket
    return (
        max(limits[0], omega_guess - 2 * (omega_guess - low)),
        min(limits[1], omega_guess + 2 * (high - omega_guess)),
    )


def _scan(shooter: _Shooter, low: float, high: float, points: int) -> List[Tuple[float, float]]:
    omegas = np.linspace(low, high, points)
    misses = np.array([shooter.miss(omega, config.scan_rtol) for omega in omegas])
    changes = _sign_changes(omegas, misses)
    logger.debug("Scanned [%.12g, %.12g]: %d sign change(s)", low, high, len(changes))
    return changes


def dirac_eigen(  # pylint: disable=too-many-locals
    potential: RadialPotential,
    m: float,
    omega_guess: float,
    node_count: int,
    grid: RadialGrid,
    n: int = 3,
) -> RadialEigenpair:
    """Solve the radial Dirac eigenproblem for the level with a given node count.

    The bracket [0.9·ω_guess, min(m(1-10⁻⁶), 1.1·ω_guess)] is scanned for sign changes
    of the miss function and widened geometrically up to (10⁻⁶·m, m(1-10⁻⁶)). Sign
    changes are refined with Brent's method in order of their distance to ω_guess.

    Arguments:
        potential: The Dirac potential V.
        m: The mass.
        omega_guess: The initial guess in (0, m).
        node_count: The requested number of nodes of v.
        grid: The radial grid of the returned profile.
        n: The spatial dimension.

    Returns:
        The normalized eigenpair with the requested node count nearest ω_guess.

    Raises:
        ValueError: When ω_guess is outside (0, m).
        NoEigenvalueError: When the miss function has no sign change in the bracket.
        NodeMismatchError: When no eigenvalue has the requested node count.

    """
    if not 0 < omega_guess < m:
        raise ValueError(f"ω_guess = {omega_guess} is outside (0, {m})")

    shooter = _Shooter(potential, m, grid, n)
    limits = (BRACKET_MARGIN * m, m * (1 - BRACKET_MARGIN))
    bracket = (max(limits[0], 0.9 * omega_guess), min(limits[1], 1.1 * omega_guess))
    changes = _scan(shooter, *bracket, config.scan_points)
    found: List[int] = []
    refined: List[Tuple[float, float]] = []

    while True:
        pending = sorted(
            (change for change in changes if change not in refined),
            key=lambda change: abs((change[0] + change[1]) / 2 - omega_guess),
        )
        for change in pending:
            refined.append(change)
            try:
                omega = brentq(
                    lambda value: shooter.miss(value, config.ode_rtol),
                    *change,
                    xtol=1e-14 * m,
                    rtol=1e-14,
                )
            except ValueError:
                logger.debug("Sign change in %s lost at the refined tolerance", change)
                continue

            v, u = shooter.profile(omega)
            nodes = count_nodes(v, config.noise_floor)
            logger.debug("Eigenvalue %.14g with %d node(s)", omega, nodes)
            if nodes == node_count:
                return _accept(potential, m, omega, (v, u), node_count, grid, n)
            found.append(nodes)

        if bracket == limits:
            break

        wider = _widened(bracket, omega_guess, limits)
        points = max(config.scan_points // 2, 4)
        if wider[0] < bracket[0]:
            changes.extend(_scan(shooter, wider[0], bracket[0], points))
        if wider[1] > bracket[1]:
            changes.extend(_scan(shooter, bracket[1], wider[1], points))
        bracket = wider

    if not found:
        raise NoEigenvalueError(bracket=bracket)
    raise NodeMismatchError(node_count=node_count, found=found)


def _accept(  # pylint: disable=too-many-arguments
    potential: RadialPotential,
    m: float,
    omega: float,
    profiles: Tuple[np.ndarray, np.ndarray],
    node_count: int,
    grid: RadialGrid,
    n: int,
) -> RadialEigenpair:
    residual = _residual_norm(potential, m, omega, profiles, grid, n)
    pair = RadialEigenpair(omega, *profiles, node_count, grid, m, n, residual)

    if pair.boundary_value > BOUNDARY_TOLERANCE:
        logger.warning(
            "Boundary value %.3g at r_max = %g exceeds %g, enlarge the grid",
            pair.boundary_value,
            grid.r_max,
            BOUNDARY_TOLERANCE,
        )
    logger.info(
        "Dirac level with %d node(s): ω = %.14g, residual %.3g", node_count, omega, residual
    )
    logger.debug(ArrayLogging("v", pair.v))
    return pair


def resample_eigenpair(
    potential: RadialPotential, pair: RadialEigenpair, grid: RadialGrid
) -> RadialEigenpair:
    """Resample an eigenpair on another grid, keeping its eigenvalue.

    Arguments:
        potential: The Dirac potential V the eigenpair was solved for.
        pair: The eigenpair.
        grid: The new radial grid.

    Returns:
        The eigenpair profiles integrated on the new grid nodes.

    """
    profiles = _Shooter(potential, pair.m, grid, pair.n).profile(pair.omega)
    residual = _residual_norm(potential, pair.m, pair.omega, profiles, grid, pair.n)
    return RadialEigenpair(pair.omega, *profiles, pair.node_count, grid, pair.m, pair.n, residual)


def check_rho_monotone(
    pair: RadialEigenpair, noise_floor: Optional[float] = None
) -> Tuple[bool, Optional[float]]:
    """Check that ρ = v² - u² strictly decreases and v is positive above the noise floor.

    Arguments:
        pair: The ground state eigenpair.
        noise_floor: Samples with ρ below noise_floor·max(v² + u²) are skipped, defaults
            to ``config.noise_floor``.

    Returns:
        Whether the check passed and the first violating radius.

    """
    if noise_floor is None:
        noise_floor = config.noise_floor

    rho = pair.v**2 - pair.u**2
    floor = noise_floor * np.max(pair.v**2 + pair.u**2)
    nodes = pair.grid.nodes
    if not rho[0] > floor:
        return False, 0.0

    above = rho > floor
    violations = np.flatnonzero(above[:-1] & (rho[1:] >= rho[:-1]))
    negative = np.flatnonzero(above & (pair.v <= 0))
    candidates = []
    if violations.size:
        candidates.append(nodes[violations[0] + 1])
    if negative.size:
        candidates.append(nodes[negative[0]])
    if candidates:
        radius = float(min(candidates))
        logger.info("ρ monotonicity fails first at r = %g", radius)
        return False, radius
    return True, None
