#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Radial Schrödinger and Dirac eigen-solvers."""

from solitonlab.radial.dirac import (
    RadialEigenpair,
    check_rho_monotone,
    dirac_eigen,
    radial_residuals,
    resample_eigenpair,
    residual_norm,
)
from solitonlab.radial.grid import RadialGrid, count_nodes
from solitonlab.radial.io import load_eigenpair, load_potential, save_eigenpair, save_potential
from solitonlab.radial.oracle import dirac_matrix, dirac_matrix_eigenvalues
from solitonlab.radial.potential import (
    ConstantPotential,
    CoulombPotential,
    GaussianPotential,
    RadialPotential,
    TabulatedPotential,
    potential_from_pyobj,
    scale_to_dirac_potential,
)
from solitonlab.radial.schrodinger import (
    SchrodingerEigenpair,
    schrodinger_eigen,
    schrodinger_levels,
)
from solitonlab.radial.seed import SweepPoint, nonrelativistic_seed, nonrelativistic_sweep
from solitonlab.radial.tuning import default_tuning_grid, harmonic_guess, tune_potential

__all__ = [
    "ConstantPotential",
    "CoulombPotential",
    "GaussianPotential",
    "RadialEigenpair",
    "RadialGrid",
    "RadialPotential",
    "SchrodingerEigenpair",
    "SweepPoint",
    "TabulatedPotential",
    "check_rho_monotone",
    "count_nodes",
    "default_tuning_grid",
    "dirac_eigen",
    "dirac_matrix",
    "dirac_matrix_eigenvalues",
    "harmonic_guess",
    "load_eigenpair",
    "load_potential",
    "nonrelativistic_seed",
    "nonrelativistic_sweep",
    "potential_from_pyobj",
    "radial_residuals",
    "resample_eigenpair",
    "residual_norm",
    "save_eigenpair",
    "save_potential",
    "schrodinger_eigen",
    "schrodinger_levels",
    "scale_to_dirac_potential",
    "tune_potential",
]
