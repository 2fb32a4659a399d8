#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import logging
from fractions import Fraction

import numpy as np
import pytest

from solitonlab.exception import AlgebraicDomainError, DegreeConditionError, KappaError
from solitonlab.nonlinearity import (
    AlgebraicNonlinearity,
    KappaClass,
    Polynomial,
    PolynomialNonlinearity,
    classify_kappa,
    growth_exponent_estimate,
    kappa_of,
    minimal_root_order,
)

_FAMILIES = {
    (1, 0, 2): AlgebraicNonlinearity(Polynomial([1, 1]), root_order=2),
    (2, 1, 1): AlgebraicNonlinearity(Polynomial([1, 0, 1]), Polynomial([1, 1])),
    (3, 0, 3): AlgebraicNonlinearity(Polynomial([1, 0, 0, 1]), root_order=3),
}


class TestKappa:
    def test_square_root(self):
        alpha = AlgebraicNonlinearity(Polynomial([2, 3]), root_order=2)
        assert kappa_of(alpha) == Fraction(1, 2)

    def test_rational(self):
        alpha = AlgebraicNonlinearity(Polynomial([1, 0, 1]), Polynomial([1, 1]), 1)
        assert kappa_of(alpha) == 1

    def test_cubic(self):
        assert kappa_of(AlgebraicNonlinearity(Polynomial([0, 1]))) == 1

    def test_degree_condition(self):
        alpha = AlgebraicNonlinearity(Polynomial([0, 1]), Polynomial([1, 0, 1]))
        with pytest.raises(DegreeConditionError):
            kappa_of(alpha)

    @pytest.mark.parametrize(
        "n, kappa, expected",
        [
            (3, Fraction(1, 2), KappaClass.ADMISSIBLE),
            (6, Fraction(1, 2), KappaClass.CRITICAL),
            (2, 100, KappaClass.ADMISSIBLE),
            (1, Fraction(7, 3), KappaClass.ADMISSIBLE),
            (3, 2, KappaClass.CRITICAL),
            (4, Fraction(3, 2), KappaClass.INADMISSIBLE),
        ],
    )
    def test_classify(self, n, kappa, expected):
        assert classify_kappa(n, kappa) is expected

    def test_critical_warning(self, caplog):
        with caplog.at_level(logging.WARNING, logger="solitonlab.nonlinearity.algebraic"):
            classify_kappa(6, Fraction(1, 2))
        assert "critical" in caplog.text

    def test_nonpositive(self):
        with pytest.raises(KappaError):
            classify_kappa(3, 0)
        with pytest.raises(KappaError):
            classify_kappa(3, Fraction(-1, 2))

    @pytest.mark.parametrize("degrees", list(_FAMILIES))
    def test_growth_estimate(self, degrees):
        alpha = _FAMILIES[degrees]
        kappa = float(kappa_of(alpha))
        assert growth_exponent_estimate(alpha) == pytest.approx(kappa, rel=1e-2)
        tau = 1e6
        assert np.log(abs(alpha(np.array([tau]))[0])) / np.log(tau) == pytest.approx(
            kappa, rel=1e-2
        )

    @pytest.mark.parametrize(
        "degree_a, degree_b, n, expected",
        [(2, 1, 3, 1), (3, 0, 3, 2), (1, 0, 6, 3), (5, 0, 2, 1), (4, 0, 4, 5)],
    )
    def test_minimal_root_order(self, degree_a, degree_b, n, expected):
        order = minimal_root_order(degree_a, degree_b, n)
        assert order == expected
        kappa = Fraction(degree_a - degree_b, order)
        assert classify_kappa(n, kappa) is KappaClass.ADMISSIBLE
        if order > 1:
            coarser = Fraction(degree_a - degree_b, order - 1)
            assert classify_kappa(n, coarser) is not KappaClass.ADMISSIBLE

    def test_minimal_root_order_degrees(self):
        with pytest.raises(DegreeConditionError):
            minimal_root_order(1, 1, 3)


class TestAlgebraicNonlinearity:
    def test_sign(self):
        alpha = AlgebraicNonlinearity(Polynomial([0, 1]), sign=-1)
        assert np.allclose(alpha(np.array([0.0, 2.0])), [0.0, -2.0])
        assert np.allclose(alpha.w(np.array([3.0])), [-9.0])

    def test_odd_root_of_negative(self):
        alpha = AlgebraicNonlinearity(Polynomial([-8]), root_order=3)
        assert np.allclose(alpha(np.array([1.0])), [-2.0])

    def test_even_root_domain(self):
        with pytest.raises(AlgebraicDomainError):
            AlgebraicNonlinearity(Polynomial([-1, 1]), root_order=2)

    def test_even_root_double_zero(self):
        alpha = AlgebraicNonlinearity(Polynomial([1, -2, 1]), root_order=2)
        assert np.allclose(alpha(np.array([0.0, 1.0, 3.0])), [1.0, 0.0, 2.0])

    def test_denominator_domain(self):
        with pytest.raises(AlgebraicDomainError):
            AlgebraicNonlinearity(Polynomial([0, 0, 1]), Polynomial([1, -1]))
        with pytest.raises(AlgebraicDomainError):
            AlgebraicNonlinearity(Polynomial([0, 0, 1]), Polynomial([0, 1]))

    def test_vanishing(self):
        with pytest.raises(AlgebraicDomainError):
            AlgebraicNonlinearity(Polynomial([1, 1]), require_vanishing=True)
        AlgebraicNonlinearity(Polynomial([0, 1]), require_vanishing=True)

    def test_arguments(self):
        with pytest.raises(ValueError):
            AlgebraicNonlinearity(Polynomial([0, 1]), root_order=0)
        with pytest.raises(ValueError):
            AlgebraicNonlinearity(Polynomial([0, 1]), sign=2)

    def test_primitive_polynomial(self):
        alpha = PolynomialNonlinearity(Polynomial([0, -1]))
        tau = np.array([0.0, 1.0, 4.0])
        assert np.allclose(alpha.primitive(tau), -(tau**2) / 2)
        assert np.allclose(alpha.to_algebraic().primitive(tau), -(tau**2) / 2)

    def test_primitive_quadrature(self):
        alpha = AlgebraicNonlinearity(Polynomial([1, 1]), root_order=2)
        tau = np.array([0.0, 0.5, 3.0, 10.0])
        expected = 2.0 / 3.0 * ((1 + tau) ** 1.5 - 1)
        assert np.allclose(alpha.primitive(tau), expected, rtol=1e-10, atol=1e-14)

    def test_pyobj(self):
        contents = {"A": [0, "1/2"], "B": [1], "N": 1, "sign": -1}
        alpha = AlgebraicNonlinearity.from_pyobj(contents)
        assert alpha.to_pyobj() == {"A": ["0", "1/2"], "B": ["1"], "N": 1, "sign": -1}
