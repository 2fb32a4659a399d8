#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import numpy as np
import pytest

from solitonlab.radial import RadialGrid, SchrodingerEigenpair, nonrelativistic_seed

_GRID = RadialGrid(12.0, 1200)


def _gaussian_state(grid):
    return SchrodingerEigenpair(-1.0, np.exp(-(grid.nodes**2) / 2), 0, grid, 1.0)


class TestNonrelativisticSeed:
    def test_gaussian(self):
        m = 1.5
        v_hat, u_hat = nonrelativistic_seed(_gaussian_state(_GRID), m, m - 1.0, _GRID)
        r = _GRID.nodes
        np.testing.assert_allclose(v_hat, np.exp(-(r**2) / 2), atol=1e-14)
        np.testing.assert_allclose(u_hat, r * np.exp(-(r**2) / 2) / (2 * m), atol=1e-4)

    @pytest.mark.parametrize("omega", [0.5, 0.9, 0.999])
    def test_regular_at_origin(self, omega):
        _, u_hat = nonrelativistic_seed(_gaussian_state(_GRID), 1.0, omega, _GRID)
        assert u_hat[0] == 0.0

    def test_scaling(self):
        state = _gaussian_state(_GRID)
        ratios = []
        for gap in (2.0**-4, 2.0**-6):
            grid = RadialGrid(_GRID.r_max / np.sqrt(gap), _GRID.n_r)
            v_hat, u_hat = nonrelativistic_seed(state, 1.0, 1.0 - gap, grid)
            ratios.append(np.sqrt(grid.integrate(u_hat**2) / grid.integrate(v_hat**2)))
        assert ratios[1] / ratios[0] == pytest.approx(0.5, rel=1e-6)

    def test_outside_gap(self):
        with pytest.raises(ValueError):
            nonrelativistic_seed(_gaussian_state(_GRID), 1.0, 1.0, _GRID)
