#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import math

import numpy as np
import pytest

from solitonlab.radial import RadialGrid, count_nodes


class TestRadialGrid:
    def test_nodes(self):
        grid = RadialGrid(2.0, 8)
        assert grid.delta == 0.25
        assert grid.nodes.shape == (9,)
        assert grid.nodes[0] == 0.0
        assert grid.nodes[-1] == 2.0
        assert grid.refined(2) == RadialGrid(2.0, 16)

    def test_invalid(self):
        with pytest.raises(ValueError):
            RadialGrid(0.0, 8)
        with pytest.raises(ValueError):
            RadialGrid(1.0, 2)

    def test_integrate(self):
        grid = RadialGrid(10.0, 1000)
        gaussian = np.exp(-(grid.nodes**2))
        assert grid.integrate(gaussian, 3) == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-10)
        assert grid.integrate(gaussian, 1) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-10)

    def test_derivative_order(self):
        errors = []
        for n_r in (200, 400):
            grid = RadialGrid(6.0, n_r)
            r = grid.nodes
            odd = r * np.exp(-(r**2))
            derivative = grid.derivative(odd, "odd")
            errors.append(np.max(np.abs(derivative - (1 - 2 * r**2) * np.exp(-(r**2)))))
        assert 3.5 < errors[0] / errors[1] < 4.5

    def test_parity_at_origin(self):
        grid = RadialGrid(4.0, 400)
        r = grid.nodes
        even = np.cos(r)
        odd = np.sin(r)
        assert grid.derivative(even, "even")[0] == 0.0
        assert grid.derivative(odd, "odd")[0] == pytest.approx(1.0, abs=1e-4)
        assert grid.quotient(odd)[0] == pytest.approx(1.0, abs=1e-4)
        np.testing.assert_allclose(grid.quotient(odd)[1:], np.sin(r[1:]) / r[1:])

    def test_pyobj(self):
        grid = RadialGrid(150.0, 3000)
        contents = grid.to_pyobj()
        assert contents == {"r_max": 150.0, "n_r": 3000}
        assert RadialGrid.from_pyobj(contents) == grid


def test_count_nodes():
    r = np.linspace(0, 10, 1001)
    assert count_nodes(np.exp(-r), 1e-12) == 0
    assert count_nodes(np.cos(r) * np.exp(-r), 1e-12) == 3
    assert count_nodes(np.zeros(5), 1e-12) == 0
    tail = np.array([1.0, 0.5, 1e-15, -1e-15, 1e-15])
    assert count_nodes(tail, 1e-12) == 0
