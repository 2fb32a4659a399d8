#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Session fixtures shared by the radial, soliton and evolver tests."""

import pytest

from solitonlab.radial import (
    RadialGrid,
    dirac_eigen,
    resample_eigenpair,
    scale_to_dirac_potential,
    schrodinger_eigen,
    tune_potential,
)
from solitonlab.soliton import MultiFrequencyWave, build_nonlinearity, density_F

MASS = 1.0
OMEGA = 0.95
AMPLITUDES = (1.0, 0.1, 0.2, 0.02)


@pytest.fixture(scope="session")
def tuned_potential():
    return tune_potential(MASS)


@pytest.fixture(scope="session")
def ground_schrodinger(tuned_potential):
    return schrodinger_eigen(tuned_potential, MASS, 0, RadialGrid(40.0, 800))


@pytest.fixture(scope="session")
def dirac_grid():
    return RadialGrid(150.0, 3000)


@pytest.fixture(scope="session")
def dirac_potential(tuned_potential):
    return scale_to_dirac_potential(tuned_potential, MASS, OMEGA)


@pytest.fixture(scope="session")
def dirac_levels(dirac_potential, dirac_grid):
    ground = dirac_eigen(dirac_potential, MASS, OMEGA, 0, dirac_grid)
    excited = dirac_eigen(dirac_potential, MASS, (MASS + OMEGA) / 2, 1, dirac_grid)
    return ground, excited


@pytest.fixture(scope="session")
def refined_levels(dirac_potential, dirac_levels):
    return tuple(
        resample_eigenpair(dirac_potential, pair, pair.grid.refined(2)) for pair in dirac_levels
    )


@pytest.fixture(scope="session")
def wave(dirac_potential, dirac_levels):
    return MultiFrequencyWave(*dirac_levels, AMPLITUDES, dirac_potential)


@pytest.fixture(scope="session")
def nonlinearity(wave):
    return build_nonlinearity(density_F(wave), wave.potential.sample(wave.grid), wave.grid)
