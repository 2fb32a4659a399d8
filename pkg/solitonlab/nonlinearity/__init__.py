#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Nonlinearities, growth exponents and algebraic certificates."""

from solitonlab.nonlinearity.algebraic import (
    AlgebraicNonlinearity,
    KappaClass,
    Nonlinearity,
    PolynomialNonlinearity,
    classify_kappa,
    critical_kappa,
    gauss_legendre_primitive,
    growth_exponent_estimate,
    kappa_of,
    minimal_root_order,
)
from solitonlab.nonlinearity.certificate import (
    Certificate,
    build_certificate,
    certificate_residual,
    default_tau_max,
)
from solitonlab.nonlinearity.polynomial import Polynomial, to_coefficient

__all__ = [
    "AlgebraicNonlinearity",
    "Certificate",
    "KappaClass",
    "Nonlinearity",
    "Polynomial",
    "PolynomialNonlinearity",
    "build_certificate",
    "certificate_residual",
    "classify_kappa",
    "critical_kappa",
    "default_tau_max",
    "gauss_legendre_primitive",
    "growth_exponent_estimate",
    "kappa_of",
    "minimal_root_order",
    "to_coefficient",
]
