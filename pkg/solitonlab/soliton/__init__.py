#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Assembly, validation and inversion of four-frequency Dirac waves."""

from solitonlab.soliton.io import load_bundle, save_bundle
from solitonlab.soliton.spinor import (
    ALPHA,
    BETA,
    GAMMA2,
    PAULI,
    Spinor4Profile,
    SpinorFrame,
    apply_dirac,
    charge_conjugate,
    conjugate_vector,
    default_directions,
    dirac_samples,
    sigma_r,
)
from solitonlab.soliton.table import NonlinearityTable, build_nonlinearity
from solitonlab.soliton.wave import (
    AmplitudeMargin,
    BetaOrthogonalityReport,
    MultiFrequencyWave,
    WaveCondition,
    WaveReport,
    beta_density,
    beta_orthogonality_report,
    density_deviation,
    density_F,
    monotonicity_violation,
    positivity_violation,
    scan_amplitude_margin,
    validate_wave,
)

__all__ = [
    "ALPHA",
    "BETA",
    "GAMMA2",
    "PAULI",
    "AmplitudeMargin",
    "BetaOrthogonalityReport",
    "MultiFrequencyWave",
    "NonlinearityTable",
    "Spinor4Profile",
    "SpinorFrame",
    "WaveCondition",
    "WaveReport",
    "apply_dirac",
    "beta_density",
    "beta_orthogonality_report",
    "build_nonlinearity",
    "charge_conjugate",
    "conjugate_vector",
    "default_directions",
    "density_F",
    "density_deviation",
    "dirac_samples",
    "load_bundle",
    "monotonicity_violation",
    "positivity_violation",
    "save_bundle",
    "scan_amplitude_margin",
    "sigma_r",
    "validate_wave",
]
