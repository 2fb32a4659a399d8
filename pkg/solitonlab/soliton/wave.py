#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The four-frequency spinor wave and its structural checks.

The wave is::

    ψ(x, t) = a₀·φ₀·e^{-iω₀t} + a₁·φ₁·e^{-iω₁t} + b₀·χ₀·e^{iω₀t} + b₁·χ₁·e^{iω₁t}

where φ_j solves ω_j·φ_j = D_m·φ_j - βV·φ_j and χ_j solves -ω_j·χ_j = D_m·χ_j - βV·χ_j.

"""

import logging
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from solitonlab.exception import DensityMismatchError
from solitonlab.radial import RadialEigenpair, RadialPotential
from solitonlab.soliton.spinor import BETA, Spinor4Profile, SpinorFrame
from solitonlab.utility import ReportLogging, ReprMixin, ReprType, config

logger = logging.getLogger(__name__)

DENSITY_TIMES = (0.0, 0.37, 1.1)
DENSITY_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-12

Mode = Tuple[complex, float, Spinor4Profile]


class MultiFrequencyWave(ReprMixin):
    """This class defines the four-frequency superposition of two Dirac levels.

    Arguments:
        ground: The eigenpair (ω₀, v₀, u₀).
        excited: The eigenpair (ω₁, v₁, u₁).
        amplitudes: The amplitudes (a₀, a₁, b₀, b₁).
        potential: The potential V of both eigenpairs.
        frame: The spinor frame, defaults to :meth:`SpinorFrame.default`.
        directions: The sampled unit directions.

    Raises:
        ValueError: When the levels do not satisfy 0 < ω₀ < ω₁ < m on a shared 3D grid.

    """

    _repr_attrs = ("frequencies", "amplitudes", "m", "grid", "frame")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        ground: RadialEigenpair,
        excited: RadialEigenpair,
        amplitudes: Sequence[complex],
        potential: RadialPotential,
        frame: Optional[SpinorFrame] = None,
        directions: Optional[np.ndarray] = None,
    ) -> None:
        if ground.grid != excited.grid or ground.m != excited.m:
            raise ValueError("Both levels must share the grid and the mass")
        if ground.n != 3 or excited.n != 3:
            raise ValueError("Spinor waves are assembled in three dimensions only")
        if not 0 < ground.omega < excited.omega < ground.m:
            raise ValueError(
                f"Frequencies must satisfy 0 < ω₀ < ω₁ < m, got {ground.omega}, {excited.omega}"
            )
        if len(amplitudes) != 4:
            raise ValueError("Four amplitudes (a₀, a₁, b₀, b₁) are required")

        self.pairs = (ground, excited)
        self.amplitudes = tuple(complex(value) for value in amplitudes)
        self.frequencies = (ground.omega, excited.omega)
        self.m = ground.m
        self.grid = ground.grid
        self.potential = potential
        self.frame = SpinorFrame.default() if frame is None else frame

        self.phi = tuple(
            Spinor4Profile("phi", (pair.v, pair.u), vector, self.grid, directions)
            for pair, vector in zip(self.pairs, self.frame.n)
        )
        self.chi = tuple(
            Spinor4Profile("chi", (pair.v, pair.u), vector, self.grid, directions)
            for pair, vector in zip(self.pairs, self.frame.m)
        )

    @property
    def profiles(self) -> Tuple[Spinor4Profile, ...]:
        """Return the profiles in the order φ₀, φ₁, χ₀, χ₁.

        Returns:
            The four profiles.

        """
        return self.phi + self.chi

    @property
    def directions(self) -> np.ndarray:
        """Return the sampled unit directions.

        Returns:
            The directions with shape (d, 3).

        """
        return self.phi[0].directions

    def with_amplitudes(self, amplitudes: Sequence[complex]) -> "MultiFrequencyWave":
        """Return the wave with the same levels and frame but other amplitudes.

        Arguments:
            amplitudes: The amplitudes (a₀, a₁, b₀, b₁).

        Returns:
            The new wave.

        """
        return MultiFrequencyWave(
            *self.pairs, amplitudes, self.potential, self.frame, self.directions
        )

    def modes(self, t: float) -> List[Mode]:
        """Return the time-dependent coefficients of the four terms.

        Arguments:
            t: The time.

        Returns:
            Tuples (coefficient, energy, profile) with i∂_t(coefficient) = energy·coefficient.

        """
        a0, a1, b0, b1 = self.amplitudes
        omega0, omega1 = self.frequencies
        return [
            (a0 * np.exp(-1j * omega0 * t), omega0, self.phi[0]),
            (a1 * np.exp(-1j * omega1 * t), omega1, self.phi[1]),
            (b0 * np.exp(1j * omega0 * t), -omega0, self.chi[0]),
            (b1 * np.exp(1j * omega1 * t), -omega1, self.chi[1]),
        ]

    def field(self, t: float) -> np.ndarray:
        """Return the spinor samples of ψ(·, t).

        Arguments:
            t: The time.

        Returns:
            The complex samples with shape (directions, nodes, 4).

        """
        return sum(  # type: ignore[return-value]
            coefficient * profile.samples for coefficient, _, profile in self.modes(t)
        )


def beta_density(samples: np.ndarray) -> np.ndarray:
    """Contract spinor samples to the real density ψ*βψ.

    Arguments:
        samples: The complex samples with shape (..., 4).

    Returns:
        The real density with the leading shape of the samples.

    """
    product = np.einsum("...a,ab,...b->...", np.conj(samples), BETA, samples)
    return product.real  # type: ignore[no-any-return]


def _closed_form(wave: MultiFrequencyWave) -> np.ndarray:
    a0, a1, b0, b1 = wave.amplitudes
    ground, excited = wave.pairs
    leading = abs(a0) ** 2 - abs(b0) ** 2
    excess = abs(a1) ** 2 - abs(b1) ** 2
    density = leading * (ground.v**2 - ground.u**2) + excess * (excited.v**2 - excited.u**2)
    return density  # type: ignore[no-any-return]


def density_F(wave: MultiFrequencyWave) -> np.ndarray:
    """Return F(r) = (|a₀|²-|b₀|²)(v₀²-u₀²) + (|a₁|²-|b₁|²)(v₁²-u₁²).

    The direct contraction ψ*βψ at :data:`DENSITY_TIMES` is compared against F before F
    is returned.

    Arguments:
        wave: The wave.

    Returns:
        The samples of F on the grid nodes.

    Raises:
        DensityMismatchError: When ψ*βψ deviates from F by more than 10⁻¹² relative.

    """
    density = _closed_form(wave)
    deviation, radius = density_deviation(wave, density)
    if deviation > DENSITY_TOLERANCE:
        raise DensityMismatchError(deviation=deviation, radius=radius)
    return density


def density_deviation(
    wave: MultiFrequencyWave,
    density: Optional[np.ndarray] = None,
    times: Sequence[float] = DENSITY_TIMES,
) -> Tuple[float, float]:
    """Compare ψ*βψ from the assembled spinors with the closed form F.

    Arguments:
        wave: The wave.
        density: The closed form F, computed when not given.
        times: The sample times.

    Returns:
        The largest deviation relative to max|F| and the radius where it occurs.

    """
    if density is None:
        density = _closed_form(wave)

    scale = max(np.abs(density).max(), np.finfo(np.float64).tiny)
    worst = np.zeros_like(density)
    for t in times:
        difference = np.abs(beta_density(wave.field(t)) - density).max(axis=0)
        worst = np.maximum(worst, difference)
    index = int(np.argmax(worst))
    return float(worst[index] / scale), float(wave.grid.nodes[index])


class BetaOrthogonalityReport(ReprMixin):
    """This class defines the integrated β-inner products of spinor profiles.

    Arguments:
        labels: The profile labels.
        matrix: The moduli |∫Ψ_p*βΨ_q d³x|.
        norms: The norms ∫|Ψ_p|² d³x.
        pointwise: The largest pointwise |χ_j*βφ_j| over equal levels.

    """

    _repr_attrs = ("labels", "flagged", "pointwise", "passed")

    def __init__(
        self,
        labels: Sequence[str],
        matrix: np.ndarray,
        norms: np.ndarray,
        pointwise: float,
    ) -> None:
        self.labels = tuple(labels)
        self.matrix = matrix
        self.norms = norms
        self.pointwise = pointwise

        bound = ORTHOGONALITY_TOLERANCE * np.sqrt(np.outer(norms, norms))
        exceeded = (matrix > bound) & ~np.eye(len(labels), dtype=bool)
        self.flagged = [
            f"{self.labels[p]}/{self.labels[q]}"
            for p, q in zip(*np.nonzero(np.triu(exceeded | exceeded.T)))
        ]

    @property
    def passed(self) -> bool:
        """Return whether no cross product exceeds the tolerance.

        Returns:
            Whether the report is clean.

        """
        return not self.flagged

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the report to a python dict.

        Returns:
            A python dict with labels, matrix, norms, pointwise maximum and flags.

        """
        return {
            "labels": list(self.labels),
            "matrix": self.matrix.tolist(),
            "norms": self.norms.tolist(),
            "pointwise": self.pointwise,
            "flagged": self.flagged,
            "passed": self.passed,
        }


def _integrate(profile: Spinor4Profile, values: np.ndarray) -> float:
    # the directions integrate polynomials of degree ≤ 5 in x̂ exactly
    return 4 * np.pi * profile.grid.integrate(values.mean(axis=0), 3)


def beta_orthogonality_report(
    profiles: Sequence[Spinor4Profile], labels: Sequence[str] = ("φ0", "φ1", "χ0", "χ1")
) -> BetaOrthogonalityReport:
    """Integrate all β-inner products Ψ_p*βΨ_q over the grid and the directions.

    Arguments:
        profiles: The profiles, usually φ₀, φ₁, χ₀, χ₁ of a wave.
        labels: The profile labels.

    Returns:
        The report; cross products above 10⁻¹²·norms are flagged.

    """
    samples = [profile.samples for profile in profiles]
    size = len(samples)
    matrix = np.zeros((size, size))
    norms = np.zeros(size)
    for p in range(size):
        norms[p] = _integrate(profiles[p], np.sum(np.abs(samples[p]) ** 2, axis=-1))
        for q in range(size):
            product = np.einsum("...a,ab,...b->...", np.conj(samples[p]), BETA, samples[q])
            matrix[p, q] = abs(
                complex(
                    _integrate(profiles[p], product.real),
                    _integrate(profiles[p], product.imag),
                )
            )

    pointwise = 0.0
    for phi in (profile for profile in profiles if profile.kind == "phi"):
        for chi in (profile for profile in profiles if profile.kind == "chi"):
            if np.array_equal(phi.v, chi.v) and np.array_equal(phi.u, chi.u):
                product = np.einsum("...a,ab,...b->...", np.conj(chi.samples), BETA, phi.samples)
                pointwise = max(pointwise, float(np.abs(product).max()))

    report = BetaOrthogonalityReport(labels, matrix, norms, pointwise)
    if not report.passed:
        logger.warning("β-orthogonality flagged for %s", ", ".join(report.flagged))
    return report


class WaveCondition(ReprMixin):
    """This class defines the outcome of one structural condition.

    Arguments:
        passed: Whether the condition holds.
        radius: The first violating radius, if any.
        value: A measured value, if the condition has one.

    """

    _repr_attrs = ("passed", "radius", "value")

    def __init__(
        self, passed: bool, radius: Optional[float] = None, value: Optional[float] = None
    ) -> None:
        self.passed = passed
        self.radius = radius
        self.value = value

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the condition to a python dict.

        Returns:
            A python dict with the outcome, the radius and the value.

        """
        return {"passed": self.passed, "radius": self.radius, "value": self.value}


class WaveReport(Mapping[str, WaveCondition], ReprMixin):
    """This class defines the structural conditions of a wave.

    Arguments:
        conditions: Condition name to outcome, in check order.

    """

    _repr_type = ReprType.MAPPING

    def __init__(self, conditions: Dict[str, WaveCondition]) -> None:
        self.conditions = conditions

    def __getitem__(self, name: str) -> WaveCondition:
        return self.conditions[name]

    def __len__(self) -> int:
        return len(self.conditions)

    def __iter__(self) -> Iterator[str]:
        return iter(self.conditions)

    @property
    def passed(self) -> bool:
        """Return whether all conditions hold.

        Returns:
            Whether the wave is valid.

        """
        return all(condition.passed for condition in self.conditions.values())

    @property
    def failures(self) -> List[str]:
        """Return the names of the failed conditions.

        Returns:
            The failed condition names in check order.

        """
        return [name for name, condition in self.conditions.items() if not condition.passed]

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the report to a python dict.

        Returns:
            A python dict with the overall outcome and every condition.

        """
        return {
            "passed": self.passed,
            "conditions": {name: value.to_pyobj() for name, value in self.conditions.items()},
        }


def positivity_violation(
    values: np.ndarray, nodes: np.ndarray, noise_floor: float
) -> Optional[float]:
    """Return the first radius where samples above the noise floor are not positive.

    Arguments:
        values: The samples.
        nodes: The radii of the samples.
        noise_floor: The relative noise floor.

    Returns:
        The first violating radius, or None.

    """
    floor = noise_floor * np.abs(values).max()
    if not values[0] > floor:
        return 0.0
    bad = np.flatnonzero((np.abs(values) > floor) & (values <= 0))
    return float(nodes[bad[0]]) if bad.size else None


def monotonicity_violation(
    values: np.ndarray, nodes: np.ndarray, noise_floor: float
) -> Optional[float]:
    """Return the first radius where samples above the noise floor stop decreasing strictly.

    Arguments:
        values: The samples.
        nodes: The radii of the samples.
        noise_floor: The relative noise floor.

    Returns:
        The first violating radius, or None.

    """
    floor = noise_floor * np.abs(values).max()
    bad = np.flatnonzero((values[1:] > floor) & (values[1:] >= values[:-1]))
    return float(nodes[bad[0] + 1]) if bad.size else None


def validate_wave(wave: MultiFrequencyWave, noise_floor: Optional[float] = None) -> WaveReport:
    """Check the structural conditions under which F inverts to a nonlinearity.

    The conditions are F > 0, F strictly decreasing, v₀ > 0, |a₀|² > |b₀|², and
    ψ*βψ = F at every sampled time; samples below the relative noise floor are skipped.

    Arguments:
        wave: The wave.
        noise_floor: The relative noise floor, defaults to ``config.noise_floor``.

    Returns:
        The report with the first violating radius of each failed condition.

    """
    if noise_floor is None:
        noise_floor = config.noise_floor

    nodes = wave.grid.nodes
    density = _closed_form(wave)
    a0, _, b0, _ = wave.amplitudes

    def condition(radius: Optional[float]) -> WaveCondition:
        return WaveCondition(radius is None, radius)

    deviation, radius = density_deviation(wave, density)
    report = WaveReport(
        {
            "F_positive": condition(positivity_violation(density, nodes, noise_floor)),
            "F_decreasing": condition(monotonicity_violation(density, nodes, noise_floor)),
            "v0_positive": condition(positivity_violation(wave.pairs[0].v, nodes, noise_floor)),
            "amplitude_order": WaveCondition(
                abs(a0) ** 2 > abs(b0) ** 2, value=abs(a0) ** 2 - abs(b0) ** 2
            ),
            "time_independent": WaveCondition(
                deviation <= DENSITY_TOLERANCE,
                None if deviation <= DENSITY_TOLERANCE else radius,
                deviation,
            ),
        }
    )
    logger.info("%s", ReportLogging("wave validation", report.to_pyobj()))
    return report


class AmplitudeMargin(ReprMixin):
    """This class defines the sweep of d = |a₁|²-|b₁|² with fixed |a₀|²-|b₀|².

    Arguments:
        samples: The swept values of d in increasing order.
        passed: Whether F is positive and strictly decreasing for each sample.
        radii: The first violating radius for each sample, NaN where it passed.

    """

    _repr_attrs = ("lower", "upper")

    def __init__(self, samples: np.ndarray, passed: np.ndarray, radii: np.ndarray) -> None:
        self.samples = samples
        self.passed = passed
        self.radii = radii

        zero = int(np.argmin(np.abs(samples)))
        self.lower: Optional[float] = None
        self.upper: Optional[float] = None
        if passed[zero]:
            low = high = zero
            while low > 0 and passed[low - 1]:
                low -= 1
            while high < len(samples) - 1 and passed[high + 1]:
                high += 1
            self.lower = float(samples[low])
            self.upper = float(samples[high])

    def contains(self, value: float) -> bool:
        """Return whether a value of d lies in the admissible interval.

        Arguments:
            value: The value of |a₁|²-|b₁|².

        Returns:
            Whether lower ≤ value ≤ upper.

        """
        if self.lower is None or self.upper is None:
            return False
        return self.lower <= value <= self.upper

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the sweep to a python dict.

        Returns:
            A python dict with the interval and the samples.

        """
        return {
            "lower": self.lower,
            "upper": self.upper,
            "samples": self.samples.tolist(),
            "passed": self.passed.tolist(),
        }


def scan_amplitude_margin(
    wave: MultiFrequencyWave,
    decades: int = 6,
    per_decade: int = 4,
    noise_floor: Optional[float] = None,
) -> AmplitudeMargin:
    """Find the interval of |a₁|²-|b₁|² for which F stays positive and strictly decreasing.

    The sweep is symmetric and geometric: 0 and ±c·10^{-k/per_decade} for
    k = 0..decades·per_decade, with c = |a₀|²-|b₀|² of the wave.

    Arguments:
        wave: The wave which fixes the levels and |a₀|²-|b₀|².
        decades: The number of decades below c.
        per_decade: The number of samples per decade.
        noise_floor: The relative noise floor, defaults to ``config.noise_floor``.

    Returns:
        The sweep and the admissible interval around 0.

    Raises:
        ValueError: When |a₀|² ≤ |b₀|².

    """
    if noise_floor is None:
        noise_floor = config.noise_floor

    a0, _, b0, _ = wave.amplitudes
    leading = abs(a0) ** 2 - abs(b0) ** 2
    if leading <= 0:
        raise ValueError("The amplitude margin requires |a₀|² > |b₀|²")

    magnitudes = leading * np.logspace(-decades, 0, decades * per_decade + 1)
    samples = np.concatenate((-magnitudes[::-1], [0.0], magnitudes))
    ground, excited = wave.pairs
    rho0 = ground.v**2 - ground.u**2
    rho1 = excited.v**2 - excited.u**2
    nodes = wave.grid.nodes

    passed = np.zeros(len(samples), dtype=bool)
    radii = np.full(len(samples), np.nan)
    for index, value in enumerate(samples):
        density = leading * rho0 + value * rho1
        radius = positivity_violation(density, nodes, noise_floor)
        if radius is None:
            radius = monotonicity_violation(density, nodes, noise_floor)
        passed[index] = radius is None
        if radius is not None:
            radii[index] = radius

    margin = AmplitudeMargin(samples, passed, radii)
    logger.info("Admissible |a₁|²-|b₁|² in [%s, %s]", margin.lower, margin.upper)
    return margin
