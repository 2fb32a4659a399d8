#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""1D spectral evolution, time spectra and the Dirac residual of assembled waves."""

from solitonlab.evolver.integrators import (
    energy_drift,
    energy_nlkg,
    evolve_nlkg,
    evolve_nls,
    mass,
    mass_drift,
    step_count,
)
from solitonlab.evolver.residual import RESIDUAL_TIMES, DiracResidual, dirac_residual
from solitonlab.evolver.spectrum import (
    SpectrumProbe,
    modulus_spectrum,
    modulus_variance,
    time_spectrum,
    variance_spectrum_coupling,
)
from solitonlab.evolver.trajectory import PeriodicGrid, Trajectory1D

__all__ = [
    "RESIDUAL_TIMES",
    "DiracResidual",
    "PeriodicGrid",
    "SpectrumProbe",
    "Trajectory1D",
    "dirac_residual",
    "energy_drift",
    "energy_nlkg",
    "evolve_nlkg",
    "evolve_nls",
    "mass",
    "mass_drift",
    "modulus_spectrum",
    "modulus_variance",
    "step_count",
    "time_spectrum",
    "variance_spectrum_coupling",
]
