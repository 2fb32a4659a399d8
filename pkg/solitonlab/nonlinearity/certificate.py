#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Algebraic certificates 𝓜(τ, w) = Σ_j M_j(τ) w^j with 𝓜(τ, τα(τ)) = 0."""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from solitonlab.exception import DegreeConditionError
from solitonlab.nonlinearity.algebraic import AlgebraicNonlinearity
from solitonlab.nonlinearity.polynomial import Polynomial
from solitonlab.utility import ReprMixin

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 10000
_TAU_MAX_FACTOR = 1e3


class Certificate(ReprMixin):
    """This class defines the polynomials M_0, ..., M_J of an algebraic certificate.

    Arguments:
        polynomials: The polynomials M_0 to M_J.

    Raises:
        DegreeConditionError: When M_J is zero or deg M_0 > deg M_j + j fails for some
            1 ≤ j ≤ J.

    """

    _repr_attrs = ("order", "polynomials")

    def __init__(self, polynomials: Sequence[Polynomial]) -> None:
        if len(polynomials) < 2 or polynomials[-1].is_zero():
            raise DegreeConditionError("The leading polynomial M_J must be nonzero")

        head = polynomials[0].degree
        for index, polynomial in enumerate(polynomials[1:], 1):
            if not head > polynomial.degree + index:
                raise DegreeConditionError(
                    f"deg M_0 > deg M_{index} + {index}",
                    degrees=(head, polynomial.degree + index),
                )

        self.polynomials: Tuple[Polynomial, ...] = tuple(polynomials)

    @property
    def order(self) -> int:
        """Return J, the largest power of w.

        Returns:
            The order J.

        """
        return len(self.polynomials) - 1

    def __call__(self, tau: np.ndarray, w: np.ndarray) -> np.ndarray:
        tau = np.asarray(tau, dtype=np.float64)
        w = np.asarray(w, dtype=np.float64)
        result = np.zeros(np.broadcast(tau, w).shape)
        for polynomial in reversed(self.polynomials):
            result = result * w + polynomial(tau)
        return result

    def scale(self, tau: np.ndarray, w: np.ndarray) -> float:
        """Return the magnitude scale max_τ Σ_j |M_j(τ)| |w|^j.

        Arguments:
            tau: The sample points.
            w: The values of w at the sample points.

        Returns:
            The scale against which residuals are compared.

        """
        tau = np.asarray(tau, dtype=np.float64)
        magnitude = np.abs(np.asarray(w, dtype=np.float64))
        total = np.zeros(np.broadcast(tau, magnitude).shape)
        for polynomial in reversed(self.polynomials):
            total = total * magnitude + np.abs(polynomial(tau))
        return float(np.max(total)) if total.size else 0.0

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the instance to a python dict.

        Returns:
            A python dict containing the order, the coefficients and the degrees::

                {
                    "order": <int>,
                    "polynomials": [[<coefficient>, ...], ...],
                    "degrees": [<int or "-inf">, ...]
                }

        """
        degrees: List[Any] = [
            int(polynomial.degree) if not polynomial.is_zero() else "-inf"
            for polynomial in self.polynomials
        ]
        return {
            "order": self.order,
            "polynomials": [polynomial.to_pyobj() for polynomial in self.polynomials],
            "degrees": degrees,
        }


def build_certificate(alpha: AlgebraicNonlinearity) -> Certificate:
    """Build the certificate M_0 = -(±τ)^N A, M_N = B of α = ±(A/B)^{1/N}.

    Arguments:
        alpha: The nonlinearity.

    Returns:
        The certificate, with M_j = 0 for 0 < j < N.

    Raises:
        DegreeConditionError: When deg A ≤ deg B.

    """
    if not alpha.numerator.degree > alpha.denominator.degree:
        raise DegreeConditionError(
            "certificate", degrees=(alpha.numerator.degree, alpha.denominator.degree)
        )

    order = alpha.root_order
    head = -(Polynomial.monomial(order, alpha.sign**order) * alpha.numerator)
    polynomials = [head] + [Polynomial()] * (order - 1) + [alpha.denominator]
    certificate = Certificate(polynomials)
    logger.debug("Built certificate of order %d: %s", order, certificate.to_pyobj())
    return certificate


def default_tau_max(alpha: AlgebraicNonlinearity) -> float:
    """Return the default upper end of the residual samples.

    Arguments:
        alpha: The nonlinearity.

    Returns:
        10³ · max(1, largest root modulus of A and B).

    """
    largest = max(
        1.0, alpha.numerator.largest_root_modulus(), alpha.denominator.largest_root_modulus()
    )
    return _TAU_MAX_FACTOR * largest


def certificate_residual(
    certificate: Certificate,
    alpha: AlgebraicNonlinearity,
    tau: Optional[np.ndarray] = None,
) -> Tuple[float, float]:
    """Return the largest residual |𝓜(τ, τα(τ))| over sample points, with its scale.

    Arguments:
        certificate: The certificate.
        alpha: The nonlinearity it certifies.
        tau: The nonnegative sample points, 10⁴ points on [0, :func:`default_tau_max`]
            when not given.

    Returns:
        The maximum absolute residual and the certificate scale on the same samples.

    Raises:
        ValueError: When a sample point is negative.

    """
    if tau is None:
        tau = np.linspace(0.0, default_tau_max(alpha), DEFAULT_SAMPLES)
    tau = np.asarray(tau, dtype=np.float64)
    if np.any(tau < 0):
        raise ValueError("Residual samples must be nonnegative")

    w = alpha.w(tau)
    residual = float(np.max(np.abs(certificate(tau, w))))
    scale = certificate.scale(tau, w)
    logger.info("Certificate residual %.3e at scale %.3e", residual, scale)
    return residual, scale
