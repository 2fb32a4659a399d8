#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import numpy as np
import pytest

from solitonlab.exception import NodeMismatchError, NoEigenvalueError
from solitonlab.radial import (
    ConstantPotential,
    RadialEigenpair,
    RadialGrid,
    check_rho_monotone,
    count_nodes,
    dirac_eigen,
    dirac_matrix,
    dirac_matrix_eigenvalues,
    nonrelativistic_sweep,
    resample_eigenpair,
    residual_norm,
)


class TestDiracEigen:
    def test_levels(self, dirac_levels):
        ground, excited = dirac_levels
        assert abs(ground.omega - 0.95) <= 0.02
        assert abs(excited.omega - 0.975) <= 0.02
        assert ground.omega < excited.omega < 1.0
        assert count_nodes(ground.v, 1e-12) == 0
        assert count_nodes(excited.v, 1e-12) == 1

    def test_normalized(self, dirac_levels):
        for pair in dirac_levels:
            assert pair.inner(pair) == pytest.approx(1.0, abs=1e-10)
            assert pair.v[0] > 0
            assert pair.u[0] == 0.0
            assert pair.boundary_value <= 1e-10

    def test_orthogonal(self, dirac_levels):
        ground, excited = dirac_levels
        assert abs(ground.inner(excited)) <= 1e-8

    def test_residual(self, dirac_potential, dirac_levels):
        for pair in dirac_levels:
            scale = max(np.abs(pair.v).max(), np.abs(pair.u).max())
            assert pair.residual == pytest.approx(residual_norm(dirac_potential, pair))
            assert pair.residual <= 10 * pair.grid.delta**2 * scale

    def test_residual_refinement(self, dirac_potential, dirac_levels):
        ground, _ = dirac_levels
        refined = resample_eigenpair(dirac_potential, ground, ground.grid.refined(2))
        assert refined.omega == ground.omega
        assert 3 <= ground.residual / refined.residual <= 5
        np.testing.assert_allclose(refined.v[::2], ground.v, atol=1e-8)

    def test_matrix_oracle(self, dirac_potential, dirac_levels):
        oracle_grid = RadialGrid(150.0, 1500)
        for pair in dirac_levels:
            omega = dirac_matrix_eigenvalues(dirac_potential, 1.0, pair.omega, oracle_grid)
            assert omega == pytest.approx(pair.omega, rel=1e-6)

    def test_free(self):
        with pytest.raises(NoEigenvalueError):
            dirac_eigen(ConstantPotential(0.0), 1.0, 0.5, 0, RadialGrid(20.0, 200))

    def test_node_mismatch(self, dirac_potential):
        with pytest.raises(NodeMismatchError):
            dirac_eigen(dirac_potential, 1.0, 0.95, 12, RadialGrid(150.0, 1500))

    def test_guess(self, dirac_potential, dirac_grid):
        with pytest.raises(ValueError):
            dirac_eigen(dirac_potential, 1.0, 1.0, 0, dirac_grid)

    def test_pyobj(self, dirac_levels):
        contents = dirac_levels[0].to_pyobj()
        assert contents["node_count"] == 0
        assert contents["grid"] == {"r_max": 150.0, "n_r": 3000}


class TestDiracMatrix:
    def test_symmetric(self, dirac_potential):
        matrix = dirac_matrix(dirac_potential, 1.0, RadialGrid(10.0, 20))
        assert matrix.shape == (39, 39)
        assert abs(matrix - matrix.T).max() == 0.0

    def test_free_gap(self):
        matrix = dirac_matrix(ConstantPotential(0.0), 1.0, RadialGrid(10.0, 50)).toarray()
        values = np.linalg.eigvalsh(matrix)
        assert np.all(np.abs(values) > 1.0 - 1e-12)

    def test_dimension(self, dirac_potential):
        with pytest.raises(ValueError):
            dirac_matrix_eigenvalues(dirac_potential, 1.0, 0.95, RadialGrid(10.0, 20), n=1)


class TestCheckRhoMonotone:
    def test_ground(self, dirac_levels):
        assert check_rho_monotone(dirac_levels[0]) == (True, None)

    def test_degenerate(self, dirac_grid):
        v = np.exp(-dirac_grid.nodes)
        pair = RadialEigenpair(0.9, v, v, 0, dirac_grid, 1.0)
        assert check_rho_monotone(pair) == (False, 0.0)

    def test_localized(self, dirac_grid):
        r = dirac_grid.nodes
        v = np.exp(-r) + 0.5 * np.exp(-((r - 3.0) ** 2))
        passed, radius = check_rho_monotone(RadialEigenpair(0.9, v, 0 * v, 0, dirac_grid, 1.0))
        assert not passed
        assert 0 < radius < 3.0

    def test_excited(self, dirac_levels):
        passed, radius = check_rho_monotone(dirac_levels[1])
        assert not passed
        assert radius is not None


@pytest.mark.slow
def test_nonrelativistic_sweep(tuned_potential, ground_schrodinger):
    points = nonrelativistic_sweep(tuned_potential, ground_schrodinger, 1.0, (3, 5))
    coarse, fine = points
    assert coarse.omega == 1.0 - 2.0**-3
    assert abs(fine.relative_shift) < abs(coarse.relative_shift)
    assert fine.profile_distance < coarse.profile_distance
    assert fine.seed_ratio / coarse.seed_ratio == pytest.approx(0.5, rel=0.05)
    assert points[0].to_pyobj()["omega"] == coarse.omega
