#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The implementation of real polynomials with exact or float coefficients."""

import math
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, List, Sequence, Tuple, TypeVar, Union, overload

import numpy as np
from numpy.polynomial import polynomial as npoly

from solitonlab.utility import ReprMixin

Coefficient = Union[int, float, Fraction]
_Scalar = TypeVar("_Scalar", int, float, Fraction)


def to_coefficient(value: Union[Coefficient, str]) -> Coefficient:
    """Convert a config value to a polynomial coefficient.

    Integers and "p/q" strings become exact fractions, floats stay floats.

    Arguments:
        value: The raw value.

    Returns:
        The coefficient.

    Raises:
        TypeError: When the value is neither a number nor a rational string.

    """
    if isinstance(value, bool):
        raise TypeError("A coefficient cannot be a bool")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())

    raise TypeError(f"Unsupported coefficient {value!r}")


class Polynomial(ReprMixin):
    """This class defines a real polynomial with ascending coefficients.

    Trailing zero coefficients are dropped, so the last coefficient is nonzero unless
    the polynomial is zero. The zero polynomial has degree ``-inf``.

    Arguments:
        coefficients: The coefficients, constant term first.

    """

    _repr_attrs = ("coefficients",)

    def __init__(self, coefficients: Iterable[Coefficient] = ()) -> None:
        values: List[Coefficient] = list(coefficients)
        while values and values[-1] == 0:
            values.pop()
        self.coefficients: Tuple[Coefficient, ...] = tuple(values)

    def _repr_head(self) -> str:
        return f"{self.__class__.__name__}(degree={self.degree})"

    @classmethod
    def monomial(cls, degree: int, coefficient: Coefficient = 1) -> "Polynomial":
        """Create the polynomial c·τ^degree.

        Arguments:
            degree: The nonnegative degree.
            coefficient: The coefficient.

        Returns:
            The monomial.

        """
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> Union[int, float]:
        """Return the degree.

        Returns:
            The degree, ``-inf`` for the zero polynomial.

        """
        return len(self.coefficients) - 1 if self.coefficients else -math.inf

    def is_zero(self) -> bool:
        """Whether this is the zero polynomial.

        Returns:
            ``True`` when there is no nonzero coefficient.

        """
        return not self.coefficients

    def is_exact(self) -> bool:
        """Whether all coefficients are exact rationals.

        Returns:
            ``True`` when no coefficient is a float.

        """
        return all(not isinstance(value, float) for value in self.coefficients)

    @overload
    def __call__(self, tau: np.ndarray) -> np.ndarray:
        ...

    @overload
    def __call__(self, tau: _Scalar) -> _Scalar:
        ...

    def __call__(self, tau):  # type: ignore[no-untyped-def]
        if isinstance(tau, np.ndarray):
            coefficients: Sequence[Coefficient] = [float(value) for value in self.coefficients]
            result = np.zeros_like(tau, dtype=np.result_type(tau, np.float64))
        else:
            coefficients = self.coefficients
            result = 0 * tau

        for value in reversed(coefficients):
            result = result * tau + value
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        pairs = zip_longest(self.coefficients, other.coefficients, fillvalue=0)
        return Polynomial(left + right for left, right in pairs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-value for value in self.coefficients)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Coefficient]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(value * other for value in self.coefficients)
        if self.is_zero() or other.is_zero():
            return Polynomial()

        product: List[Coefficient] = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def antiderivative(self) -> "Polynomial":
        """Return the antiderivative vanishing at 0.

        Returns:
            The integrated polynomial.

        """
        integrated: List[Coefficient] = [0]
        for index, value in enumerate(self.coefficients):
            if isinstance(value, float):
                integrated.append(value / (index + 1))
            else:
                integrated.append(Fraction(value, index + 1))
        return Polynomial(integrated)

    def roots(self) -> np.ndarray:
        """Return the complex roots computed numerically.

        Returns:
            The roots, empty for constant polynomials.

        """
        if len(self.coefficients) < 2:
            return np.zeros(0, dtype=np.complex128)
        roots: np.ndarray = npoly.polyroots([float(value) for value in self.coefficients])
        return roots

    def nonnegative_roots(self, tolerance: float) -> np.ndarray:
        """Return the sorted real roots in [0, inf) within a tolerance.

        Arguments:
            tolerance: Roots with imaginary part below ``tolerance * max(1, |root|)`` count
                as real; real parts down to ``-tolerance`` count as nonnegative.

        Returns:
            The sorted real parts of those roots, clipped at 0.

        """
        roots = self.roots()
        real = np.abs(roots.imag) <= tolerance * np.maximum(1.0, np.abs(roots))
        candidates = roots.real[real]
        return np.sort(np.maximum(candidates[candidates >= -tolerance], 0.0))

    def largest_root_modulus(self) -> float:
        """Return the largest root modulus.

        Returns:
            The largest |root|, 0 for constant polynomials.

        """
        roots = self.roots()
        return float(np.max(np.abs(roots))) if roots.size else 0.0

    @classmethod
    def from_pyobj(cls, contents: Sequence[Union[Coefficient, str]]) -> "Polynomial":
        """Create a :class:`Polynomial` from a list of coefficients.

        Arguments:
            contents: Ascending coefficients as numbers or "p/q" strings.

        Returns:
            The polynomial.

        """
        return cls(to_coefficient(value) for value in contents)

    def to_pyobj(self) -> List[Union[float, str]]:
        """Dump the coefficients to a json-able list.

        Returns:
            Exact coefficients as "p/q" strings, float coefficients as floats.

        """
        return [value if isinstance(value, float) else str(value) for value in self.coefficients]
