#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""Basic concepts of solitonlab custom exceptions."""

from typing import Any, Dict, Optional, Sequence, Tuple, Type


class SolitonLabException(Exception):
    """This is the base class for solitonlab custom exceptions.

    Arguments:
       message: The error message.

    """

    def __init__(self, message: Optional[str] = None):
        super().__init__()
        self._message = message

    def __str__(self) -> str:
        return self._message if self._message else ""


class SupportError(SolitonLabException):
    """This is the base class for custom exceptions in the support calculus module."""


class GridMismatchError(SupportError):
    """This class defines the exception for distributions sampled on different grids.

    Arguments:
        message: The error message.
        left: The repr of the first grid.
        right: The repr of the second grid.

    """

    def __init__(
        self, message: Optional[str] = None, *, left: Any = None, right: Any = None
    ) -> None:
        super().__init__(message)
        self._left = left
        self._right = right

    def __str__(self) -> str:
        if self._left is not None and self._right is not None:
            return f"Grid mismatch: {self._left} != {self._right}"
        return super().__str__()


class AsymmetricAxisError(SupportError):
    """This class defines the exception for an ω-axis which is not symmetric about 0."""


class NonlinearityError(SolitonLabException):
    """This is the base class for custom exceptions in the nonlinearity module."""


class DegreeConditionError(NonlinearityError):
    """This class defines the exception for a violated polynomial degree condition.

    Arguments:
        message: The error message.
        degrees: The pair of degrees which should be strictly ordered.

    """

    def __init__(
        self, message: Optional[str] = None, *, degrees: Optional[Tuple[Any, Any]] = None
    ) -> None:
        super().__init__(message)
        self._degrees = degrees

    def __str__(self) -> str:
        if self._degrees is not None:
            left, right = self._degrees
            prefix = f"{self._message}: " if self._message else ""
            return f"{prefix}degree {left} is not greater than {right}"
        return super().__str__()


class AlgebraicDomainError(NonlinearityError):
    """This class defines the exception for an algebraic function undefined on τ ≥ 0."""


class KappaError(NonlinearityError):
    """This class defines the exception for a non-positive growth exponent."""


class BootstrapError(SolitonLabException):
    """This is the base class for custom exceptions in the bootstrap module."""


class SpectralError(SolitonLabException):
    """This is the base class for custom exceptions in the radial eigenvalue solvers."""


class NoBoundStateError(SpectralError):
    """This class defines the exception for a potential too shallow for the requested level.

    Arguments:
        node_count: The requested node count.
        found: The number of bound states found.

    """

    def __init__(
        self, message: Optional[str] = None, *, node_count: int = 0, found: int = 0
    ) -> None:
        super().__init__(message)
        self._node_count = node_count
        self._found = found

    def __str__(self) -> str:
        if self._message:
            return self._message
        return (
            f"No bound state with {self._node_count} nodes: "
            f"only {self._found} negative level(s) found"
        )


class RootFindFailedError(SpectralError):
    """This class defines the exception for a failed potential tuning.

    Arguments:
        message: The error message.
        residuals: The last residuals of the root finder.
        parameters: The last parameters of the root finder.

    """

    def __init__(
        self,
        message: Optional[str] = None,
        *,
        residuals: Optional[Sequence[float]] = None,
        parameters: Optional[Sequence[float]] = None,
    ) -> None:
        super().__init__(message)
        self.residuals = tuple(residuals) if residuals is not None else ()
        self.parameters = tuple(parameters) if parameters is not None else ()

    def __str__(self) -> str:
        base = super().__str__() or "Root finding failed"
        return f"{base}; last residuals={self.residuals}, last parameters={self.parameters}"


class NoEigenvalueError(SpectralError):
    """This class defines the exception for a miss function without a sign change.

    Arguments:
        bracket: The last searched eigenvalue bracket.

    """

    def __init__(
        self, message: Optional[str] = None, *, bracket: Optional[Tuple[float, float]] = None
    ) -> None:
        super().__init__(message)
        self.bracket = bracket

    def __str__(self) -> str:
        if self.bracket is not None:
            low, high = self.bracket
            return f"No eigenvalue in [{low:.12g}, {high:.12g}]"
        return super().__str__()


class NodeMismatchError(SpectralError):
    """This class defines the exception for eigenvalues without the requested node count.

    Arguments:
        node_count: The requested node count.
        found: The node counts of the eigenvalues which were found.

    """

    def __init__(
        self,
        message: Optional[str] = None,
        *,
        node_count: int = 0,
        found: Sequence[int] = (),
    ) -> None:
        super().__init__(message)
        self._node_count = node_count
        self._found = tuple(found)

    def __str__(self) -> str:
        if self._message:
            return self._message
        return f"No eigenvalue with {self._node_count} nodes, found node counts {self._found}"


class BuilderError(SolitonLabException):
    """This is the base class for custom exceptions in the soliton builder module."""


class NonMonotoneInputError(BuilderError):
    """This class defines the exception for samples which fail strict monotonicity.

    Arguments:
        name: The name of the samples.
        radius: The first radius where monotonicity fails.

    """

    def __init__(
        self, message: Optional[str] = None, *, name: str = "", radius: Optional[float] = None
    ) -> None:
        super().__init__(message)
        self._name = name
        self._radius = radius

    def __str__(self) -> str:
        if self._radius is not None:
            return f"{self._name} is not strictly monotone at r={self._radius:.6g}"
        return super().__str__()


class DensityMismatchError(BuilderError):
    """This class defines the exception for ψ*βψ disagreeing with the closed form F.

    Arguments:
        deviation: The largest deviation relative to max|F|.
        radius: The radius where it occurs.

    """

    def __init__(
        self, message: Optional[str] = None, *, deviation: float = 0.0, radius: float = 0.0
    ) -> None:
        super().__init__(message)
        self._deviation = deviation
        self._radius = radius

    def __str__(self) -> str:
        if self._message:
            return self._message
        return f"ψ*βψ deviates from F by {self._deviation:.3g} relative at r={self._radius:.6g}"


class EvolutionError(SolitonLabException):
    """This is the base class for custom exceptions in the evolver module."""


class BlowUpError(EvolutionError):
    """This class defines the exception for a field exceeding the blow-up limit.

    Arguments:
        time: The time when the limit was exceeded.
        sup_norm: The sup norm of the field at that time.

    """

    def __init__(
        self, message: Optional[str] = None, *, time: float = 0.0, sup_norm: float = 0.0
    ) -> None:
        super().__init__(message)
        self._time = time
        self._sup_norm = sup_norm

    def __str__(self) -> str:
        if self._message:
            return self._message
        return f"Blow-up at t={self._time:.6g}: sup norm {self._sup_norm:.6g}"


class TooFewSnapshotsError(EvolutionError):
    """This class defines the exception for a trajectory too short for a time spectrum."""


class RunError(SolitonLabException):
    """This is the base class for custom exceptions in the command line runner.

    Attributes:
        EXIT_CODE: The process exit code of the error.

    """

    EXIT_CODE: int = 1


class ConfigError(RunError):
    """This class defines the exception for an invalid run config.

    Arguments:
        message: The error message.
        key: The invalid config key.

    """

    EXIT_CODE = 2

    def __init__(self, message: Optional[str] = None, *, key: Optional[str] = None) -> None:
        super().__init__(message)
        self._key = key

    def __str__(self) -> str:
        if self._key is not None:
            return f"Invalid config key '{self._key}': {self._message}"
        return super().__str__()


class AssertionFailedError(RunError):
    """This class defines the exception for failed pipeline assertions.

    Arguments:
        failures: The names of the failed assertions.

    """

    EXIT_CODE = 1

    def __init__(self, message: Optional[str] = None, *, failures: Sequence[str] = ()) -> None:
        super().__init__(message)
        self.failures = tuple(failures)

    def __str__(self) -> str:
        if self.failures:
            return f"Failed assertions: {', '.join(self.failures)}"
        return super().__str__()



EXIT_CODE_DISTRIBUTOR: Dict[Type[SolitonLabException], int] = {
    ConfigError: ConfigError.EXIT_CODE,
    AssertionFailedError: AssertionFailedError.EXIT_CODE,
    SupportError: RunError.EXIT_CODE,
    NonlinearityError: RunError.EXIT_CODE,
    BootstrapError: RunError.EXIT_CODE,
    SpectralError: RunError.EXIT_CODE,
    BuilderError: RunError.EXIT_CODE,
    EvolutionError: RunError.EXIT_CODE,
}
