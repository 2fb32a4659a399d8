#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import math
from fractions import Fraction

import numpy as np
import pytest

from solitonlab.nonlinearity import Polynomial, to_coefficient


class TestPolynomial:
    def test_degree(self):
        assert Polynomial().degree == -math.inf
        assert Polynomial([0, 0]).is_zero()
        assert Polynomial([1, 2, 0, 0]).degree == 1
        assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)

    def test_exact_evaluation(self):
        polynomial = Polynomial.from_pyobj([1, "1/2", 3])
        assert polynomial(Fraction(2, 3)) == 1 + Fraction(1, 3) + Fraction(4, 3)
        assert polynomial.is_exact()

    def test_array_evaluation(self):
        polynomial = Polynomial([Fraction(1, 2), 0, 2])
        tau = np.array([0.0, 1.0, 3.0])
        assert np.allclose(polynomial(tau), [0.5, 2.5, 18.5])
        assert polynomial(tau).dtype == np.float64

    def test_arithmetic(self):
        left = Polynomial([1, 1])
        right = Polynomial([-1, 1])
        assert left * right == Polynomial([-1, 0, 1])
        assert left - left == Polynomial()
        assert left**3 == Polynomial([1, 3, 3, 1])
        assert (left * Fraction(1, 2)).coefficients == (Fraction(1, 2), Fraction(1, 2))

    def test_antiderivative(self):
        assert Polynomial([3, 0, 3]).antiderivative() == Polynomial([0, 3, 0, 1])

    def test_nonnegative_roots(self):
        polynomial = Polynomial([2, -3, 1])
        assert np.allclose(polynomial.nonnegative_roots(1e-9), [1.0, 2.0])
        assert Polynomial([1, 0, 1]).nonnegative_roots(1e-9).size == 0
        assert Polynomial([1, 1]).nonnegative_roots(1e-9).size == 0

    def test_pyobj(self):
        polynomial = Polynomial.from_pyobj(["9/5", 0.25, 2])
        assert polynomial.to_pyobj() == ["9/5", 0.25, "2"]

    def test_coefficient(self):
        assert to_coefficient("9/5") == Fraction(9, 5)
        assert isinstance(to_coefficient(0.5), float)
        with pytest.raises(TypeError):
            to_coefficient(True)
