#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The pipelines behind ``solitonlab run``.

Every pipeline declares its parameters with :func:`solitonlab.params.param`, checks the
physical preconditions of the bound arguments before anything is written, and returns
named pass/fail assertions together with json-able results.

"""

import logging
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple, TypeVar

import numpy as np

from solitonlab.bootstrap import Status, gain_step_bound, save_trace_csv, step_bound
from solitonlab.bootstrap import run as run_bootstrap
from solitonlab.bootstrap.trace import DEFAULT_MAX_ITER
from solitonlab.evolver import (
    RESIDUAL_TIMES,
    PeriodicGrid,
    Trajectory1D,
    dirac_residual,
    energy_drift,
    evolve_nlkg,
    evolve_nls,
    mass_drift,
    modulus_spectrum,
    modulus_variance,
    step_count,
    time_spectrum,
    variance_spectrum_coupling,
)
from solitonlab.evolver.spectrum import MIN_SNAPSHOTS, PARSEVAL_TOLERANCE
from solitonlab.exception import (
    AlgebraicDomainError,
    BuilderError,
    ConfigError,
    DegreeConditionError,
)
from solitonlab.nonlinearity import (
    AlgebraicNonlinearity,
    KappaClass,
    Polynomial,
    PolynomialNonlinearity,
    build_certificate,
    certificate_residual,
    classify_kappa,
    default_tau_max,
    kappa_of,
)
from solitonlab.nonlinearity.certificate import DEFAULT_SAMPLES
from solitonlab.params import Params, param, ptype
from solitonlab.radial import (
    GaussianPotential,
    RadialEigenpair,
    RadialGrid,
    RadialPotential,
    dirac_eigen,
    save_eigenpair,
    save_potential,
    scale_to_dirac_potential,
    tune_potential,
)
from solitonlab.radial.dirac import BOUNDARY_TOLERANCE
from solitonlab.soliton import (
    MultiFrequencyWave,
    NonlinearityTable,
    build_nonlinearity,
    density_F,
    load_bundle,
    save_bundle,
    validate_wave,
)
from solitonlab.soliton.io import WAVE_FILE
from solitonlab.support import (
    Grid2,
    GriddedDistribution,
    check_titchmarsh_partial,
    save_distribution,
    save_report,
)
from solitonlab.utility import ReprMixin, config, write_csv, write_json

logger = logging.getLogger(__name__)

REFINEMENT_RATIO = 1.5
CERTIFICATE_TOLERANCE = 1e-10
LEVEL_TOLERANCE = 0.02
RESIDUAL_FACTOR = 10.0
MASS_DRIFT_TOLERANCE = 1e-10
ENERGY_DRIFT_TOLERANCE = 1e-6
DEFAULT_AMPLITUDES = (1.0, 0.1, 0.2, 0.02)
FOCUSING_CUBIC = Polynomial([0, -1])


class RunContext(ReprMixin):
    """This class defines where and how a pipeline writes its artifacts.

    Arguments:
        output: The output directory.
        seed: The seed of the randomized suites.
        output_format: "json", or "csv" to add CSV exports of the tabular results.

    """

    _repr_attrs = ("output", "seed", "output_format")

    def __init__(self, output: Path, seed: int, output_format: str) -> None:
        self.output = output
        self.seed = seed
        self.output_format = output_format
        self.artifacts: List[str] = []

    @property
    def csv(self) -> bool:
        """Whether CSV exports are requested.

        Returns:
            ``True`` for the "csv" format.

        """
        return self.output_format == "csv"

    def path(self, name: str, *companions: str) -> Path:
        """Return the path of an artifact and record it for the report.

        Arguments:
            name: The artifact name relative to the output directory.
            companions: Names of files written next to it by the same call.

        Returns:
            The artifact path.

        """
        self.artifacts.extend((name,) + companions)
        return self.output / name


class PipelineResult(ReprMixin):
    """This class defines the outcome of a pipeline.

    Arguments:
        assertions: Assertion name to outcome, in check order.
        results: The json-able results.

    """

    _repr_attrs = ("passed", "failures")

    def __init__(self, assertions: Dict[str, bool], results: Dict[str, Any]) -> None:
        self.assertions = {name: bool(value) for name, value in assertions.items()}
        self.results = results

    @property
    def failures(self) -> List[str]:
        """Return the names of the failed assertions.

        Returns:
            The failed names in check order.

        """
        return [name for name, value in self.assertions.items() if not value]

    @property
    def passed(self) -> bool:
        """Whether every assertion holds.

        Returns:
            ``True`` when no assertion failed.

        """
        return not self.failures


_Arguments = Dict[str, Any]
_Runner = Callable[[_Arguments, RunContext], PipelineResult]
_Checker = Callable[[_Arguments], Any]


class Pipeline(ReprMixin):
    """This class defines a registered pipeline.

    Arguments:
        name: The pipeline tag.
        params: The declared parameters.
        runner: The function executing the pipeline.
        checker: The precondition check of the bound arguments.

    """

    _repr_attrs = ("name", "params")

    def __init__(
        self, name: str, params: Params, runner: _Runner, checker: Optional[_Checker] = None
    ) -> None:
        self.name = name
        self.params = params
        self._runner = runner
        self._checker = checker

    def bind(self, arguments: Dict[str, Any]) -> _Arguments:
        """Bind raw arguments and check the physical preconditions.

        Arguments:
            arguments: The raw arguments.

        Returns:
            The bound arguments with defaults filled in.

        Raises:
            ConfigError: When a key is unknown, missing or invalid.

        """
        bound = self.params.bind(arguments)
        if self._checker:
            self._checker(bound)
        return bound

    def run(self, arguments: _Arguments, context: RunContext) -> PipelineResult:
        """Run the pipeline on bound arguments.

        Arguments:
            arguments: The arguments returned by :meth:`bind`.
            context: The output context.

        Returns:
            The pipeline result.

        """
        logger.info("Running pipeline %s", self.name)
        return self._runner(arguments, context)


PIPELINES: Dict[str, Pipeline] = {}


class _PipelineRegister:
    """Decorator class to register pipeline runners to 'PIPELINES'.

    Arguments:
        name: The pipeline tag.
        checker: The precondition check of the bound arguments.
        factories: Parameter name to the tuple returned by :func:`param`.

    """

    _R = TypeVar("_R", bound=_Runner)

    def __init__(self, name: str, checker: Optional[_Checker] = None, **factories: Any) -> None:
        self._name = name
        self._checker = checker
        self._params = Params.from_factories(**factories)

    def __call__(self, runner: _R) -> _R:
        PIPELINES[self._name] = Pipeline(self._name, self._params, runner, self._checker)
        return runner


def _require(condition: bool, key: str, message: str) -> None:
    if not condition:
        raise ConfigError(message, key=key)


@contextmanager
def _invalid(key: str) -> Iterator[None]:
    try:
        yield
    except ValueError as error:
        raise ConfigError(str(error), key=key) from None


# titchmarsh


def _random_column(rng: np.random.Generator, n_omega: int) -> np.ndarray:
    values = np.zeros(n_omega, dtype=np.complex128)
    if rng.random() < 0.2:
        return values
    low, high = np.sort(rng.integers(0, n_omega, size=2))
    size = high - low + 1
    moduli = rng.uniform(0.1, 1.0, size=size) * (rng.random(size) < 0.7)
    moduli[0] = rng.uniform(0.1, 1.0)
    moduli[-1] = rng.uniform(0.1, 1.0)
    values[low : high + 1] = moduli * np.exp(2j * np.pi * rng.random(size))
    return values


def _random_distribution(rng: np.random.Generator, grid: Grid2) -> GriddedDistribution:
    values = np.stack([_random_column(rng, grid.n_omega) for _ in range(grid.n_x)])
    return GriddedDistribution(grid, values)


def _cone_pair(step: float) -> Tuple[GriddedDistribution, GriddedDistribution]:
    # Columns [|x|, 2] and [1 - |x|, 2]: both lower edges are cones with a kink at 0.
    count = int(round(2 / step)) + 1
    center = (count - 1) // 2
    grid = Grid2(-1.0, 1.0, count, 0.0, 2.0, count)
    left = np.zeros(grid.shape)
    right = np.zeros(grid.shape)
    for index in range(count):
        radius = abs(index - center)
        left[index, radius:] = 1.0
        right[index, center - radius :] = 1.0
    return GriddedDistribution(grid, left), GriddedDistribution(grid, right)


def _check_titchmarsh(arguments: _Arguments) -> None:
    _require(arguments["pairs"] >= 1, "pairs", "at least one pair is needed")
    _require(arguments["n_x"] >= 1, "n_x", "at least one x node is needed")
    _require(arguments["n_omega"] >= 2, "n_omega", "at least two ω nodes are needed")
    step = arguments["step"]
    _require(0 < step <= 0.5, "step", "the cone step must be in (0, 0.5]")
    _require(
        abs(2 / step - round(2 / step)) <= 1e-9 * (2 / step), "step", "the step must divide 2"
    )


@_PipelineRegister(
    "titchmarsh",
    _check_titchmarsh,
    pairs=param(100, ptype=ptype.Integer),
    n_x=param(9, ptype=ptype.Integer),
    n_omega=param(33, ptype=ptype.Integer),
    step=param(0.1, ptype=ptype.Number),
)
def _titchmarsh(arguments: _Arguments, context: RunContext) -> PipelineResult:
    rng = np.random.default_rng(context.seed)
    grid = Grid2(-1.0, 1.0, arguments["n_x"], -1.0, 1.0, arguments["n_omega"])
    flags: Dict[str, List[bool]] = {
        "index_additive": [],
        "sigma_matches": [],
        "envelope_additive": [],
    }
    for _ in range(arguments["pairs"]):
        report = check_titchmarsh_partial(
            _random_distribution(rng, grid), _random_distribution(rng, grid)
        )
        for name, values in flags.items():
            values.append(bool(getattr(report, name)))

    coarse = check_titchmarsh_partial(*_cone_pair(arguments["step"]))
    fine = check_titchmarsh_partial(*_cone_pair(arguments["step"] / 2))
    if fine.max_lower_discrepancy > 0:
        ratio = coarse.max_lower_discrepancy / fine.max_lower_discrepancy
    else:
        ratio = float("inf")
    save_report(coarse, context.path("cone_coarse.json"))
    save_report(fine, context.path("cone_fine.json"))
    if context.csv:
        columns = {"pair": np.arange(arguments["pairs"], dtype=np.int64)}
        columns.update((name, np.array(values)) for name, values in flags.items())
        write_csv(columns, context.path("pairs.csv"))

    assertions = {name: all(values) for name, values in flags.items()}
    assertions["refinement_ratio"] = ratio >= REFINEMENT_RATIO
    return PipelineResult(
        assertions,
        {
            "pairs": arguments["pairs"],
            "violations": {name: values.count(False) for name, values in flags.items()},
            "coarse_discrepancy": coarse.max_lower_discrepancy,
            "fine_discrepancy": fine.max_lower_discrepancy,
            "refinement_ratio": ratio,
        },
    )


# bootstrap


def _check_bootstrap(arguments: _Arguments) -> None:
    _require(arguments["n"] >= 1, "n", "the dimension must be at least 1")
    _require(arguments["kappa"] > 0, "kappa", "the growth exponent must be positive")
    _require(arguments["max_iter"] >= 1, "max_iter", "max_iter must be at least 1")


@_PipelineRegister(
    "bootstrap",
    _check_bootstrap,
    n=param(ptype=ptype.Integer),
    kappa=param(ptype=ptype.Rational),
    max_iter=param(DEFAULT_MAX_ITER, ptype=ptype.Integer),
)
def _bootstrap(arguments: _Arguments, context: RunContext) -> PipelineResult:
    n, kappa = arguments["n"], arguments["kappa"]
    trace = run_bootstrap(n, kappa, arguments["max_iter"])
    kappa_class = classify_kappa(n, kappa)

    results = trace.to_pyobj()
    write_json(results, context.path("trace.json"))
    if context.csv:
        save_trace_csv(trace, context.path("trace.csv"))

    results["kappa_class"] = kappa_class.name
    results["step_bound"] = step_bound(n, kappa)
    results["gain_step_bound"] = gain_step_bound(n, kappa)
    return PipelineResult(
        {
            "terminated": trace.status is not Status.MAX_ITER,
            "admissible_done": (
                kappa_class is not KappaClass.ADMISSIBLE or trace.status is Status.DONE
            ),
        },
        results,
    )


# certificate


def _algebraic(arguments: _Arguments) -> AlgebraicNonlinearity:
    return AlgebraicNonlinearity.from_pyobj(
        {key: arguments[key] for key in ("A", "B", "N", "sign")}
    )


def _check_certificate(arguments: _Arguments) -> None:
    _require(arguments["N"] >= 1, "N", "the root order must be positive")
    _require(arguments["samples"] >= 2, "samples", "at least two samples are needed")
    tau_max = arguments["tau_max"]
    _require(tau_max is None or tau_max > 0, "tau_max", "tau_max must be positive")
    try:
        _algebraic(arguments)
    except (AlgebraicDomainError, ValueError) as error:
        raise ConfigError(str(error), key="A") from None


@_PipelineRegister(
    "certificate",
    _check_certificate,
    A=param(ptype=ptype.Coefficients),
    B=param([1], ptype=ptype.Coefficients),
    N=param(1, ptype=ptype.Integer),
    sign=param(1, (1, -1), ptype.Integer),
    tau_max=param(None, ptype=ptype.Number),
    samples=param(DEFAULT_SAMPLES, ptype=ptype.Integer),
)
def _certificate(arguments: _Arguments, context: RunContext) -> PipelineResult:
    alpha = _algebraic(arguments)
    tau_max = arguments["tau_max"] or default_tau_max(alpha)
    results: Dict[str, Any] = {"alpha": alpha.to_pyobj(), "tau_max": tau_max}
    try:
        certificate = build_certificate(alpha)
    except DegreeConditionError as error:
        logger.warning("%s", error)
        results["error"] = str(error)
        return PipelineResult({"degree_condition": False}, results)

    tau = np.linspace(0.0, tau_max, arguments["samples"])
    residual, scale = certificate_residual(certificate, alpha, tau)
    results.update(
        certificate=certificate.to_pyobj(),
        kappa=str(kappa_of(alpha)),
        residual=residual,
        scale=scale,
    )
    write_json(results, context.path("certificate.json"))
    if context.csv:
        w = alpha.w(tau)
        write_csv(
            {"tau": tau, "w": w, "residual": certificate(tau, w)},
            context.path("certificate.csv"),
        )

    return PipelineResult(
        {"degree_condition": True, "residual_bound": residual <= CERTIFICATE_TOLERANCE * scale},
        results,
    )


# dirac-eigen, build-soliton and residual

_RADIAL_PARAMS = {
    "m": param(1.0, ptype=ptype.Number),
    "omega": param(0.95, ptype=ptype.Number),
    "r_max": param(150.0, ptype=ptype.Number),
    "n_r": param(3000, ptype=ptype.Integer),
    "depth": param(None, ptype=ptype.Number),
    "width": param(None, ptype=ptype.Number),
}

_WAVE_PARAMS = dict(
    _RADIAL_PARAMS, amplitudes=param(list(DEFAULT_AMPLITUDES), ptype=ptype.NumberArray)
)


def _check_radial(arguments: _Arguments) -> None:
    m, omega = arguments["m"], arguments["omega"]
    _require(m > 0, "m", "the mass must be positive")
    _require(0 < omega < m, "omega", f"ω must lie in (0, {m})")
    with _invalid("n_r"):
        RadialGrid(arguments["r_max"], arguments["n_r"])

    depth, width = arguments["depth"], arguments["width"]
    _require((depth is None) == (width is None), "width", "depth and width go together")
    if depth is not None:
        with _invalid("depth"):
            GaussianPotential(depth, width)


def _check_wave(arguments: _Arguments) -> None:
    _check_radial(arguments)
    _require(len(arguments["amplitudes"]) == 4, "amplitudes", "expected (a₀, a₁, b₀, b₁)")


def _schrodinger_potential(arguments: _Arguments) -> RadialPotential:
    if arguments["depth"] is None:
        return tune_potential(arguments["m"])
    return GaussianPotential(arguments["depth"], arguments["width"])


def _level_checks(levels: Tuple[RadialEigenpair, ...], m: float, omega: float) -> Dict[str, bool]:
    targets = (omega, (m + omega) / 2)
    tolerance = LEVEL_TOLERANCE * m
    return {
        f"level_{pair.node_count}": abs(pair.omega - targets[pair.node_count]) <= tolerance
        for pair in levels
        if pair.node_count < len(targets)
    }


def _check_dirac_eigen(arguments: _Arguments) -> None:
    _check_radial(arguments)
    _require(arguments["node_count"] >= 0, "node_count", "the node count must be nonnegative")
    guess = arguments["omega_guess"]
    _require(
        guess is None or 0 < guess < arguments["m"], "omega_guess", "the guess must be in (0, m)"
    )


@_PipelineRegister(
    "dirac-eigen",
    _check_dirac_eigen,
    node_count=param(0, ptype=ptype.Integer),
    omega_guess=param(None, ptype=ptype.Number),
    **_RADIAL_PARAMS,
)
def _dirac_eigen(arguments: _Arguments, context: RunContext) -> PipelineResult:
    m, omega, node_count = arguments["m"], arguments["omega"], arguments["node_count"]
    potential = _schrodinger_potential(arguments)
    dirac = scale_to_dirac_potential(potential, m, omega)
    grid = RadialGrid(arguments["r_max"], arguments["n_r"])

    guess = arguments["omega_guess"]
    if guess is None:
        guess = omega if node_count == 0 else (m + omega) / 2
    pair = dirac_eigen(dirac, m, guess, node_count, grid)

    save_potential(dirac, grid, context.path("potential.json", "potential.csv"))
    save_eigenpair(pair, context.path("eigenpair.json", "eigenpair.csv"))

    assertions = {"boundary": pair.boundary_value <= BOUNDARY_TOLERANCE}
    if arguments["depth"] is None:
        assertions.update(_level_checks((pair,), m, omega))
    results = {"potential": potential.to_pyobj(), "eigenpair": pair.to_pyobj()}
    results["eigenpair"]["boundary_value"] = pair.boundary_value
    return PipelineResult(assertions, results)


def _dirac_levels(
    potential: RadialPotential, m: float, omega: float, grid: RadialGrid
) -> Tuple[RadialEigenpair, ...]:
    guesses = ((omega, 0), ((m + omega) / 2, 1))
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = [
            executor.submit(dirac_eigen, potential, m, guess, node_count, grid)
            for guess, node_count in guesses
        ]
        return tuple(future.result() for future in futures)


def _build_wave(
    arguments: _Arguments, context: RunContext
) -> Tuple[MultiFrequencyWave, Optional[NonlinearityTable], Dict[str, bool], Dict[str, Any]]:
    m, omega = arguments["m"], arguments["omega"]
    potential = _schrodinger_potential(arguments)
    dirac = scale_to_dirac_potential(potential, m, omega)
    levels = _dirac_levels(dirac, m, omega, RadialGrid(arguments["r_max"], arguments["n_r"]))

    wave = MultiFrequencyWave(*levels, arguments["amplitudes"], dirac)
    validation = validate_wave(wave)
    assertions = {name: condition.passed for name, condition in validation.items()}
    if arguments["depth"] is None:
        assertions.update(_level_checks(levels, m, omega))
    results: Dict[str, Any] = {
        "potential": potential.to_pyobj(),
        "levels": [pair.to_pyobj() for pair in levels],
        "validation": validation.to_pyobj(),
    }

    table: Optional[NonlinearityTable] = None
    try:
        table = build_nonlinearity(density_F(wave), dirac.sample(wave.grid), wave.grid)
    except BuilderError as error:
        logger.error("No nonlinearity table: %s", error)
        results["error"] = str(error)
        assertions["nonlinearity_table"] = False
    else:
        save_bundle(wave, table, context.path("bundle"), validation.to_pyobj())
        results["nonlinearity"] = {"tau_max": table.tau_max, "f_max": table.f_max}

    return wave, table, assertions, results


@_PipelineRegister("build-soliton", _check_wave, **_WAVE_PARAMS)
def _build_soliton(arguments: _Arguments, context: RunContext) -> PipelineResult:
    _, _, assertions, results = _build_wave(arguments, context)
    return PipelineResult(assertions, results)


def _check_residual(arguments: _Arguments) -> None:
    _require(len(arguments["times"]) >= 1, "times", "at least one time is needed")
    bundle = arguments["bundle"]
    if bundle is None:
        _check_wave(arguments)
    else:
        _require((Path(bundle) / WAVE_FILE).is_file(), "bundle", f"no wave bundle at {bundle}")


@_PipelineRegister(
    "residual",
    _check_residual,
    bundle=param(None, ptype=ptype.String),
    times=param(list(RESIDUAL_TIMES), ptype=ptype.NumberArray),
    **_WAVE_PARAMS,
)
def _residual(arguments: _Arguments, context: RunContext) -> PipelineResult:
    table: Optional[NonlinearityTable]
    assertions: Dict[str, bool]
    results: Dict[str, Any]
    if arguments["bundle"] is None:
        wave, table, assertions, results = _build_wave(arguments, context)
    else:
        wave, table = load_bundle(arguments["bundle"])
        assertions, results = {}, {"bundle": arguments["bundle"]}
    if table is None:
        return PipelineResult(assertions, results)

    report = dirac_residual(wave, table, arguments["times"])
    write_json(report.to_pyobj(), context.path("residual.json"))

    eigen = max(pair.residual for pair in wave.pairs)
    tolerance = RESIDUAL_FACTOR * (eigen + report.delta_r**2 * report.potential_norm)
    assertions.update(
        residual_bound=report.max_l2 <= tolerance,
        identity_agreement=report.max_agreement <= tolerance,
        within_table=not report.extended,
    )
    results.update(residual=report.to_pyobj(), tolerance=tolerance)
    return PipelineResult(assertions, results)


# evolve and spectrum

_EVOLUTION_PARAMS = {
    "model": param("nls", ("nls", "nlkg"), ptype.String),
    "half_length": param(32.0, ptype=ptype.Number),
    "n_x": param(512, ptype=ptype.Integer),
    "dt": param(0.002, ptype=ptype.Number),
    "t_final": param(20.0, ptype=ptype.Number),
    "stride": param(50, ptype=ptype.Integer),
    "m": param(1.0, ptype=ptype.Number),
    "alpha": param([0, -1], ptype=ptype.Coefficients),
    "initial": param("soliton", ("soliton", "plane-wave", "standing-wave"), ptype.String),
    "omega": param(-1.0, ptype=ptype.Number),
    "amplitude": param(1.0, ptype=ptype.Number),
    "wavenumber": param(1.0, ptype=ptype.Number),
    "center": param(0.0, ptype=ptype.Number),
    "blow_up_limit": param(None, ptype=ptype.Number),
}


def _check_evolution(arguments: _Arguments) -> int:
    with _invalid("n_x"):
        grid = PeriodicGrid(arguments["half_length"], arguments["n_x"])
    with _invalid("t_final"):
        steps = step_count(arguments["dt"], arguments["t_final"], arguments["stride"])

    if arguments["model"] == "nlkg":
        _require(arguments["m"] >= 0, "m", "the mass must be nonnegative")
        _require(
            arguments["dt"] <= config.cfl_number * grid.delta,
            "dt",
            f"Δt exceeds the CFL guard {config.cfl_number}·Δx = "
            f"{config.cfl_number * grid.delta}",
        )
    if arguments["initial"] == "soliton":
        _require(arguments["omega"] < 0, "omega", "a soliton needs ω < 0")
    limit = arguments["blow_up_limit"]
    _require(limit is None or limit > 0, "blow_up_limit", "the limit must be positive")
    return steps


def _initial_data(arguments: _Arguments, grid: PeriodicGrid) -> Tuple[np.ndarray, np.ndarray]:
    x = grid.nodes - arguments["center"]
    amplitude, k = arguments["amplitude"], arguments["wavenumber"]
    initial = arguments["initial"]
    if initial == "soliton":
        # ωφ = -φ'' - φ³ for α(τ) = -τ
        omega = arguments["omega"]
        u0 = np.sqrt(-2 * omega) / np.cosh(np.sqrt(-omega) * x)
        return u0.astype(np.complex128), np.zeros(grid.n_x, dtype=np.complex128)
    if initial == "plane-wave":
        u0 = amplitude * np.exp(1j * k * x)
        return u0, -1j * np.sqrt(arguments["m"] ** 2 + k**2) * u0

    u0 = amplitude * np.cos(k * x)
    return u0.astype(np.complex128), np.zeros(grid.n_x, dtype=np.complex128)


def _evolve(arguments: _Arguments) -> Tuple[Trajectory1D, PolynomialNonlinearity]:
    grid = PeriodicGrid(arguments["half_length"], arguments["n_x"])
    alpha = PolynomialNonlinearity(Polynomial.from_pyobj(arguments["alpha"]))
    u0, v0 = _initial_data(arguments, grid)
    steps = (arguments["dt"], arguments["t_final"], arguments["stride"])

    if arguments["model"] == "nls":
        trajectory = evolve_nls(u0, grid, alpha, *steps, arguments["blow_up_limit"])
    else:
        trajectory = evolve_nlkg(
            u0, v0, grid, arguments["m"], alpha, *steps, arguments["blow_up_limit"]
        )
    trajectory.metadata.update(alpha=list(arguments["alpha"]), initial=arguments["initial"])
    return trajectory, alpha


@_PipelineRegister("evolve", _check_evolution, **_EVOLUTION_PARAMS)
def _evolve_pipeline(arguments: _Arguments, context: RunContext) -> PipelineResult:
    trajectory, alpha = _evolve(arguments)
    trajectory.save_feather(context.path("trajectory.feather"))
    if context.csv:
        trajectory.save_csv(context.path("trajectory.csv"))

    results: Dict[str, Any] = {
        "model": trajectory.model,
        "snapshots": len(trajectory),
        "variance_max": float(modulus_variance(trajectory).max()),
    }
    if trajectory.model == "nls":
        drift = mass_drift(trajectory)
        results["mass_drift"] = drift
        assertions = {"mass_conservation": drift <= MASS_DRIFT_TOLERANCE}
    else:
        drift = energy_drift(trajectory, arguments["m"], alpha)
        results["energy_drift"] = drift
        assertions = {"energy_conservation": drift <= ENERGY_DRIFT_TOLERANCE}
    return PipelineResult(assertions, results)


def _frequency_hint(arguments: _Arguments) -> Optional[float]:
    frequency: Optional[float] = arguments["frequency"]
    if frequency is None and arguments["trajectory"] is None:
        cubic = Polynomial.from_pyobj(arguments["alpha"]) == FOCUSING_CUBIC
        if arguments["model"] == "nls" and arguments["initial"] == "soliton" and cubic:
            frequency = arguments["omega"]
    return frequency


def _check_spectrum(arguments: _Arguments) -> None:
    _require(len(arguments["probes"]) >= 1, "probes", "at least one probe is needed")
    relative = arguments["relative"]
    _require(relative is None or 0 < relative < 1, "relative", "expected a value in (0, 1)")

    frequency = arguments["frequency"]
    _require(
        frequency is None or bool(np.isfinite(frequency)), "frequency", "expected a finite value"
    )

    path = arguments["trajectory"]
    if path is not None:
        _require(Path(path).is_file(), "trajectory", f"no trajectory file at {path}")
        return
    steps = _check_evolution(arguments)
    _require(
        steps // arguments["stride"] + 1 >= MIN_SNAPSHOTS,
        "t_final",
        f"a time spectrum needs at least {MIN_SNAPSHOTS} snapshots",
    )


@_PipelineRegister(
    "spectrum",
    _check_spectrum,
    probes=param([0.0], ptype=ptype.NumberArray),
    relative=param(None, ptype=ptype.Number),
    frequency=param(None, ptype=ptype.Number),
    trajectory=param(None, ptype=ptype.String),
    **_EVOLUTION_PARAMS,
)
def _spectrum(arguments: _Arguments, context: RunContext) -> PipelineResult:
    if arguments["trajectory"] is None:
        trajectory, _ = _evolve(arguments)
    else:
        trajectory = Trajectory1D.load_feather(arguments["trajectory"])

    relative = arguments["relative"]
    frequency = _frequency_hint(arguments)
    probe, distribution = time_spectrum(trajectory, arguments["probes"], relative, frequency)
    write_json(probe.to_pyobj(), context.path("spectrum.json"))
    if context.csv:
        probe.save_csv(context.path("spectrum.csv"))

    coupling = variance_spectrum_coupling(probe, trajectory, relative)
    assertions = {
        "parseval": probe.parseval_error <= PARSEVAL_TOLERANCE,
        "variance_coupling": not coupling,
    }
    results: Dict[str, Any] = {
        "spectrum": probe.to_pyobj(),
        "single_bin": probe.single_bin(relative).tolist(),
        "coupling_violations": coupling,
    }
    if frequency:
        # a single bin at ω₀ within one bin width
        lower, upper = probe.edges(relative)
        tolerance = probe.delta_omega * (1 + 1e-9)
        near = (np.abs(lower - frequency) <= tolerance) & (np.abs(upper - frequency) <= tolerance)
        assertions["single_bin"] = bool(probe.single_bin(relative).all())
        assertions["frequency_edges"] = bool(near.all())
        results["frequency"] = frequency
    if distribution is not None:
        save_distribution(distribution, context.path("distribution.json", "distribution.csv"))
        _, report = modulus_spectrum(distribution)
        save_report(report, context.path("modulus_titchmarsh.json"))
        assertions["modulus_index_additive"] = report.index_additive
        results["modulus_index_additive"] = report.index_additive
    return PipelineResult(assertions, results)
