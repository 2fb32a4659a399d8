#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Parameter type releated classes."""

from fractions import Fraction
from typing import Any as TypingAny
from typing import List, Type


class ParameterType:
    """The base class of parameter type."""

    @staticmethod
    def check(_: TypingAny) -> TypingAny:
        """Check the parameter type.

        Arguments:
            _: The argument which needs to be checked.

        Raises:
            NotImplementedError: The check method in base class should never be called.

        """
        raise NotImplementedError

    @staticmethod
    def dump(arg: TypingAny) -> TypingAny:
        """Dump the parameter into its json presentation.

        Arguments:
            arg: The parameter value.

        Returns:
            The json presentation of the input value.

        """
        return arg


PType = Type[ParameterType]


class Any(ParameterType):
    """Unconstrained parameter type."""

    @staticmethod
    def check(arg: TypingAny) -> TypingAny:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The input argument unchanged.

        """
        return arg


class Integer(ParameterType):
    """Parameter type for integers."""

    @staticmethod
    def check(arg: TypingAny) -> int:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The input argument unchanged.

        Raises:
            TypeError: When the input argument is not an integer.

        """
        if isinstance(arg, bool) or not isinstance(arg, int):
            raise TypeError("Argument should be an integer")

        return arg


class Number(ParameterType):
    """Parameter type for real numbers.

    YAML 1.1 reads exponent literals without a dot ("1e-6") as strings, so numeric
    strings are accepted too.

    """

    @staticmethod
    def check(arg: TypingAny) -> float:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The argument converted to float.

        Raises:
            TypeError: When the input argument is not a real number.

        """
        if isinstance(arg, str):
            try:
                return float(arg)
            except ValueError:
                raise TypeError(f"Cannot parse '{arg}' as a number") from None
        if isinstance(arg, bool) or not isinstance(arg, (int, float, Fraction)):
            raise TypeError("Argument should be a number")

        return float(arg)


class Rational(ParameterType):
    """Parameter type for exact rationals, given as integers or "p/q" strings."""

    @staticmethod
    def check(arg: TypingAny) -> Fraction:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The argument as an exact fraction.

        Raises:
            TypeError: When the input argument is a float or cannot be parsed.

        """
        if isinstance(arg, bool) or isinstance(arg, float):
            raise TypeError("Rational arguments must be integers or 'p/q' strings, not floats")
        if isinstance(arg, (int, Fraction)):
            return Fraction(arg)
        if isinstance(arg, str):
            try:
                return Fraction(arg.strip())
            except ValueError:
                raise TypeError(f"Cannot parse '{arg}' as a rational") from None

        raise TypeError("Argument should be a rational")

    @staticmethod
    def dump(arg: TypingAny) -> str:
        """Dump the rational into its json presentation.

        Arguments:
            arg: The rational value.

        Returns:
            The "p/q" string of the value.

        """
        return str(arg)


class String(ParameterType):
    """Parameter type for strings."""

    @staticmethod
    def check(arg: TypingAny) -> str:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The input argument unchanged.

        Raises:
            TypeError: When the input argument is not a string.

        """
        if not isinstance(arg, str):
            raise TypeError("Argument should be a string")

        return arg


class NumberArray(ParameterType):
    """Parameter type for lists of real numbers."""

    @staticmethod
    def check(arg: TypingAny) -> List[float]:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The argument as a list of floats.

        Raises:
            TypeError: When the input argument is not a list of numbers.

        """
        if not isinstance(arg, (list, tuple)):
            raise TypeError("Argument should be a list of numbers")

        return [Number.check(item) for item in arg]


class Coefficients(ParameterType):
    """Parameter type for ascending polynomial coefficients.

    Items are integers, floats or "p/q" strings; integers and strings stay exact.

    """

    @staticmethod
    def check(arg: TypingAny) -> List[TypingAny]:
        """Check the parameter type.

        Arguments:
            arg: The argument which needs to be checked.

        Returns:
            The coefficients with strings stripped.

        Raises:
            TypeError: When an item is neither a number nor a rational string.

        """
        if not isinstance(arg, (list, tuple)):
            raise TypeError("Argument should be a list of coefficients")

        coefficients: List[TypingAny] = []
        for item in arg:
            if isinstance(item, str):
                item = item.strip()
                Rational.check(item)
            elif isinstance(item, bool) or not isinstance(item, (int, float)):
                raise TypeError(f"Unsupported coefficient {item!r}")
            coefficients.append(item)

        return coefficients
