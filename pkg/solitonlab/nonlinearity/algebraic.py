#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Nonlinearities α(τ) and the classification of their growth exponent κ."""

import logging
import math
from enum import Enum, auto
from fractions import Fraction
from typing import Any, Dict, Optional, Union

import numpy as np
from typing_extensions import Protocol

from solitonlab.exception import AlgebraicDomainError, DegreeConditionError, KappaError
from solitonlab.nonlinearity.polynomial import Polynomial
from solitonlab.utility import ReprMixin, config

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


class Nonlinearity(Protocol):
    """The protocol of a real nonlinearity α evaluated on τ = |u|² ≥ 0."""

    def __call__(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate α.

        Arguments:
            tau: The nonnegative arguments.

        """

    def primitive(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate the antiderivative G(τ) = ∫_0^τ α(s) ds.

        Arguments:
            tau: The nonnegative arguments.

        """


def gauss_legendre_primitive(
    alpha: Nonlinearity, tau: np.ndarray, nodes: Optional[int] = None
) -> np.ndarray:
    """Integrate α from 0 to τ with a Gauss-Legendre rule.

    Arguments:
        alpha: The nonlinearity.
        tau: The upper limits.
        nodes: The number of nodes, ``config.legendre_nodes`` when not given.

    Returns:
        The integrals, with the shape of ``tau``.

    """
    if nodes is None:
        nodes = config.legendre_nodes

    points, weights = np.polynomial.legendre.leggauss(nodes)
    tau = np.asarray(tau, dtype=np.float64)
    scaled = tau[..., np.newaxis] * (points + 1.0) / 2.0
    values = alpha(scaled.ravel()).reshape(scaled.shape)
    return tau * (values @ weights) / 2.0  # type: ignore[no-any-return]


class PolynomialNonlinearity(ReprMixin):
    """This class defines a polynomial nonlinearity α(τ) = P(τ), such as α(τ) = -τ.

    Arguments:
        polynomial: The polynomial P.

    """

    _repr_attrs = ("polynomial",)

    def __init__(self, polynomial: Polynomial) -> None:
        self.polynomial = polynomial
        self._primitive = polynomial.antiderivative()

    def __call__(self, tau: np.ndarray) -> np.ndarray:
        return self.polynomial(np.asarray(tau, dtype=np.float64))

    def primitive(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate the exact antiderivative of the polynomial.

        Arguments:
            tau: The nonnegative arguments.

        Returns:
            ∫_0^τ P(s) ds.

        """
        return self._primitive(np.asarray(tau, dtype=np.float64))

    def to_algebraic(self) -> "AlgebraicNonlinearity":
        """Return the same nonlinearity written as ±A/B with N = 1.

        Returns:
            The :class:`AlgebraicNonlinearity` with A = P, B = 1, N = 1 and sign +1.

        """
        return AlgebraicNonlinearity(self.polynomial)


class AlgebraicNonlinearity(ReprMixin):
    """This class defines α(τ) = ±(A(τ)/B(τ))^{1/N}.

    For odd N the real root of A/B is taken. For even N, A/B must be nonnegative on
    τ ≥ 0. The denominator must not vanish on τ ≥ 0.

    Arguments:
        numerator: The polynomial A.
        denominator: The polynomial B, the constant 1 when not given.
        root_order: The root order N ≥ 1.
        sign: The sign ±1.
        require_vanishing: Whether to require α(0) = 0, that is A(0) = 0.

    Raises:
        ValueError: When N or the sign is out of range.
        AlgebraicDomainError: When α is undefined somewhere on τ ≥ 0.

    """

    _repr_attrs = ("numerator", "denominator", "root_order", "sign")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        numerator: Polynomial,
        denominator: Optional[Polynomial] = None,
        root_order: int = 1,
        sign: int = 1,
        require_vanishing: bool = False,
    ) -> None:
        if isinstance(root_order, bool) or not isinstance(root_order, int) or root_order < 1:
            raise ValueError("The root order N must be a positive integer")
        if sign not in (1, -1):
            raise ValueError("The sign must be +1 or -1")

        self.numerator = numerator
        self.denominator = denominator if denominator is not None else Polynomial([1])
        self.root_order = root_order
        self.sign = sign
        self._check_domain(require_vanishing)

    def _check_domain(self, require_vanishing: bool) -> None:
        tolerance = config.positivity_tolerance
        if self.denominator.is_zero():
            raise AlgebraicDomainError("The denominator B is the zero polynomial")
        if self.denominator(0) == 0 or self.denominator.nonnegative_roots(tolerance).size:
            raise AlgebraicDomainError("The denominator B vanishes on τ ≥ 0")
        if require_vanishing and self.numerator(0) != 0:
            raise AlgebraicDomainError("α(0) = 0 requires A(0) = 0")
        if self.root_order % 2 == 0 and not self._ratio_nonnegative(tolerance):
            raise AlgebraicDomainError(
                f"A/B takes negative values on τ ≥ 0 but N = {self.root_order} is even"
            )

    def _ratio_nonnegative(self, tolerance: float) -> bool:
        roots = self.numerator.nonnegative_roots(tolerance)
        end = float(roots[-1]) + 1.0 if roots.size else 1.0
        probes = np.concatenate([[0.0], (roots[1:] + roots[:-1]) / 2, [end]])
        ratio = self.numerator(probes) / self.denominator(probes)
        scale = np.maximum(1.0, np.abs(self.numerator(probes)))
        return bool(np.all(ratio >= -tolerance * scale))

    def __call__(self, tau: np.ndarray) -> np.ndarray:
        tau = np.asarray(tau, dtype=np.float64)
        ratio = self.numerator(tau) / self.denominator(tau)
        if self.root_order == 1:
            return self.sign * ratio  # type: ignore[no-any-return]

        if self.root_order % 2:
            root = np.sign(ratio) * np.abs(ratio) ** (1.0 / self.root_order)
            return self.sign * root  # type: ignore[no-any-return]

        scale = np.maximum(1.0, np.abs(self.numerator(tau)))
        if np.any(ratio < -config.positivity_tolerance * scale):
            raise AlgebraicDomainError("Negative radicand for an even root order")
        radical = np.maximum(ratio, 0.0) ** (1.0 / self.root_order)
        return self.sign * radical  # type: ignore[no-any-return]

    def w(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate w(τ) = τα(τ).

        Arguments:
            tau: The nonnegative arguments.

        Returns:
            The values of w.

        """
        tau = np.asarray(tau, dtype=np.float64)
        return tau * self(tau)  # type: ignore[no-any-return]

    def primitive(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate the antiderivative G(τ) = ∫_0^τ α(s) ds by Gauss-Legendre quadrature.

        Arguments:
            tau: The nonnegative arguments.

        Returns:
            The values of G.

        """
        if self.root_order == 1 and self.denominator.degree == 0:
            factor = Fraction(self.sign) / self.denominator.coefficients[0]
            return PolynomialNonlinearity(self.numerator * factor).primitive(tau)
        return gauss_legendre_primitive(self, tau)

    @classmethod
    def from_pyobj(cls, contents: Dict[str, Any]) -> "AlgebraicNonlinearity":
        """Create an :class:`AlgebraicNonlinearity` from a config block.

        Arguments:
            contents: A python dict of the form::

                    {
                        "A": [<coefficient>, ...],
                        "B": [<coefficient>, ...],   # optional, default [1]
                        "N": <int>,                  # optional, default 1
                        "sign": <+1 or -1>           # optional, default +1
                    }

        Returns:
            The nonlinearity.

        """
        return cls(
            Polynomial.from_pyobj(contents["A"]),
            Polynomial.from_pyobj(contents.get("B", [1])),
            contents.get("N", 1),
            contents.get("sign", 1),
        )

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the instance to a config block.

        Returns:
            A python dict with the keys "A", "B", "N" and "sign".

        """
        return {
            "A": self.numerator.to_pyobj(),
            "B": self.denominator.to_pyobj(),
            "N": self.root_order,
            "sign": self.sign,
        }


class KappaClass(Enum):
    """KappaClass is an enumeration type of the growth exponent classes.

    It includes 'ADMISSIBLE', 'CRITICAL' and 'INADMISSIBLE'.

    """

    ADMISSIBLE = auto()
    CRITICAL = auto()
    INADMISSIBLE = auto()


def kappa_of(alpha: AlgebraicNonlinearity) -> Fraction:
    """Return the growth exponent κ = (deg A - deg B)/N.

    Arguments:
        alpha: The nonlinearity.

    Returns:
        κ as an exact rational.

    Raises:
        DegreeConditionError: When deg A ≤ deg B.

    """
    degree_a = alpha.numerator.degree
    degree_b = alpha.denominator.degree
    if not degree_a > degree_b:
        raise DegreeConditionError("growth exponent", degrees=(degree_a, degree_b))

    return Fraction(int(degree_a) - int(degree_b), alpha.root_order)


def critical_kappa(n: int) -> Optional[Fraction]:
    """Return the critical growth exponent 2/(n-2).

    Arguments:
        n: The spatial dimension.

    Returns:
        2/(n-2) for n ≥ 3, ``None`` for n ≤ 2 where every κ > 0 is admissible.

    """
    return Fraction(2, n - 2) if n >= 3 else None


def classify_kappa(n: int, kappa: Rational) -> KappaClass:
    """Classify κ against the admissible range 0 < κ < 2/(n-2).

    Arguments:
        n: The spatial dimension, at least 1.
        kappa: The growth exponent.

    Returns:
        The :class:`KappaClass`.

    Raises:
        ValueError: When n < 1.
        KappaError: When κ ≤ 0.

    """
    if n < 1:
        raise ValueError("The dimension must be at least 1")
    kappa = Fraction(kappa)
    if kappa <= 0:
        raise KappaError(f"The growth exponent must be positive, got {kappa}")

    critical = critical_kappa(n)
    if critical is None or kappa < critical:
        return KappaClass.ADMISSIBLE
    if kappa == critical:
        logger.warning("κ = %s is critical in dimension %d", kappa, n)
        return KappaClass.CRITICAL
    return KappaClass.INADMISSIBLE


def growth_exponent_estimate(alpha: Nonlinearity, tau: float = 1e6) -> float:
    """Estimate the growth exponent from the log-slope of |α| between τ and 10τ.

    Arguments:
        alpha: The nonlinearity.
        tau: The lower probe point.

    Returns:
        log10(|α(10τ)| / |α(τ)|).

    """
    values = np.abs(alpha(np.array([tau, 10.0 * tau])))
    return float(np.log10(values[1] / values[0]))


def minimal_root_order(degree_a: int, degree_b: int, n: int) -> int:
    """Return the smallest root order N which makes κ = (a - b)/N admissible.

    Arguments:
        degree_a: The degree a of the numerator.
        degree_b: The degree b of the denominator.
        n: The spatial dimension.

    Returns:
        The smallest N ≥ 1 with (a - b)/N < 2/(n - 2), or 1 when n ≤ 2.

    Raises:
        DegreeConditionError: When a ≤ b.

    """
    if degree_a <= degree_b:
        raise DegreeConditionError("root order", degrees=(degree_a, degree_b))
    if n <= 2:
        return 1

    return math.floor(Fraction((degree_a - degree_b) * (n - 2), 2)) + 1
