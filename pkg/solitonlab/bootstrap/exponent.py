#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The exponent arithmetic of the regularity bootstrap, in exact rationals.

An exponent is a :class:`~fractions.Fraction` or ``math.inf``; ``math.inf`` stands for
the L∞ endpoint, where the induction is done.

"""

import logging
import math
from enum import Enum, auto
from fractions import Fraction
from typing import Dict, Tuple, Type, TypeVar, Union

from tensorbay.utility import AttrsMixin, attr, common_loads

from solitonlab.exception import BootstrapError, KappaError
from solitonlab.nonlinearity import KappaClass, classify_kappa
from solitonlab.utility import ReprMixin

logger = logging.getLogger(__name__)

Exponent = Union[Fraction, float]
RationalLike = Union[int, str, Fraction]


def to_fraction(value: RationalLike) -> Fraction:
    """Convert an integer, a fraction or a "p/q" string to a fraction.

    Arguments:
        value: The value.

    Returns:
        The exact fraction.

    Raises:
        TypeError: When the value is a float.

    """
    if isinstance(value, float):
        raise TypeError("Exponents are exact, pass a fraction or a 'p/q' string")
    return Fraction(value)


def format_exponent(value: Exponent) -> str:
    """Format an exponent for reports.

    Arguments:
        value: The exponent.

    Returns:
        "p/q" for a fraction, "inf" for ``math.inf``.

    """
    return "inf" if value == math.inf else str(value)


def parse_exponent(value: str) -> Exponent:
    """Parse an exponent formatted by :func:`format_exponent`.

    Arguments:
        value: The formatted exponent.

    Returns:
        The exponent.

    """
    return math.inf if value == "inf" else Fraction(value)


class Status(Enum):
    """Status is an enumeration type of bootstrap step and trace outcomes.

    It includes 'ADVANCED' for a step which produced a new exponent, and the terminal
    states 'DONE', 'STALLED', 'MAX_ITER' and 'DIVERGED'.

    """

    ADVANCED = auto()
    DONE = auto()
    STALLED = auto()
    MAX_ITER = auto()
    DIVERGED = auto()


class BootstrapState(ReprMixin):
    """This class defines a state (n, κ, q) of the bootstrap induction.

    Arguments:
        n: The spatial dimension.
        kappa: The growth exponent κ > 0.
        q: The current Lebesgue exponent, at least 2, or ``math.inf``.

    Raises:
        ValueError: When n < 1 or q < 2.
        KappaError: When κ ≤ 0.

    """

    _repr_attrs = ("n", "kappa", "q")

    def __init__(self, n: int, kappa: RationalLike, q: Union[Exponent, RationalLike]) -> None:
        if n < 1:
            raise ValueError("The dimension must be at least 1")
        kappa = to_fraction(kappa)
        if kappa <= 0:
            raise KappaError(f"The growth exponent must be positive, got {kappa}")
        if q != math.inf:
            q = to_fraction(q)  # type: ignore[arg-type]
            if q < 2:
                raise ValueError(f"The exponent q must be at least 2, got {q}")

        self.n = n
        self.kappa = kappa
        self.q: Exponent = q  # type: ignore[assignment]

    @property
    def finite(self) -> bool:
        """Whether q is finite.

        Returns:
            ``True`` unless q is ``math.inf``.

        """
        return self.q != math.inf


class BootstrapStep(AttrsMixin, ReprMixin):
    """This class defines one step q → Q of the bootstrap, with exponents as strings.

    Arguments:
        index: The step index, starting at 1.
        q: The exponent before the step.
        p: The intermediate exponent P = q/(1 + 2κ).
        q_next: The exponent Q after the step, "inf" when done.
        status: The name of the step outcome.

    """

    _T = TypeVar("_T", bound="BootstrapStep")

    _repr_attrs: Tuple[str, ...] = ("q", "p", "q_next", "status")

    index: int = attr()
    q: str = attr()
    p: str = attr()
    q_next: str = attr()
    status: str = attr()

    def __init__(  # pylint: disable=too-many-arguments
        self, index: int, q: Exponent, p: Exponent, q_next: Exponent, status: Status
    ) -> None:
        self.index = index
        self.q = format_exponent(q)
        self.p = format_exponent(p)
        self.q_next = format_exponent(q_next)
        self.status = status.name

    def _repr_head(self) -> str:
        return f"{self.__class__.__name__}({self.index})"

    @property
    def outcome(self) -> Status:
        """Return the step outcome.

        Returns:
            The :class:`Status` of the step.

        """
        return Status[self.status]

    @property
    def next_exponent(self) -> Exponent:
        """Return Q as an exponent.

        Returns:
            The exponent after the step.

        """
        return parse_exponent(self.q_next)

    @classmethod
    def from_pyobj(cls: Type[_T], contents: Dict[str, Union[int, str]]) -> _T:
        """Create a :class:`BootstrapStep` instance from python dict.

        Arguments:
            contents: A python dict containing all the information of the step::

                    {
                        "index": <int>
                        "q": <str>
                        "p": <str>
                        "q_next": <str>
                        "status": <str>
                    }

        Returns:
            A :class:`BootstrapStep` instance created from the input python dict.

        """
        return common_loads(cls, contents)

    def to_pyobj(self) -> Dict[str, Union[int, str]]:
        """Dump the instance to a python dict.

        Returns:
            A python dict containing all the information of the step.

        """
        return self._dumps()  # type: ignore[no-any-return]


def initial_exponent(n: int, kappa: RationalLike) -> Exponent:
    """Return the exponent q₀ the induction starts from.

    Arguments:
        n: The spatial dimension.
        kappa: The growth exponent κ > 0.

    Returns:
        ``math.inf`` for n = 1 (nothing to do), 2 + 4κ for n = 2 and 2n/(n-2) for n ≥ 3.

    """
    state = BootstrapState(n, kappa, 2)
    if state.n == 1:
        return math.inf
    if state.n == 2:
        return 2 + 4 * state.kappa
    return Fraction(2 * state.n, state.n - 2)


def step(state: BootstrapState, index: int = 1) -> BootstrapStep:
    """Apply one bootstrap step: P = q/(1 + 2κ), then 1/Q = 1/P - 2/n.

    When 1/P ≤ 2/n any Q works and the step is done with Q = ∞. A fixed point Q = q
    is a stall. An exponent Q below 2 can not continue the induction.

    Arguments:
        state: The state, with finite q and n ≥ 2.
        index: The index stored in the step record.

    Returns:
        The :class:`BootstrapStep`.

    Raises:
        ValueError: When q is infinite or n < 2.
        BootstrapError: When 1/Q is not positive after the done check.

    """
    if not state.finite:
        raise ValueError("Cannot step from q = inf")
    if state.n < 2:
        raise ValueError("The bootstrap step needs n ≥ 2")

    q: Fraction = state.q  # type: ignore[assignment]
    p = q / (1 + 2 * state.kappa)
    threshold = Fraction(2, state.n)
    if 1 / p <= threshold:
        return BootstrapStep(index, q, p, math.inf, Status.DONE)

    inverse = 1 / p - threshold
    if inverse <= 0:
        raise BootstrapError(f"Non-positive 1/Q = {inverse} after the done check")

    q_next = 1 / inverse
    if q_next == q:
        status = Status.STALLED
    elif q_next < 2:
        status = Status.DIVERGED
    else:
        status = Status.ADVANCED

    logger.debug("Step %d: q=%s P=%s Q=%s %s", index, q, p, q_next, status.name)
    return BootstrapStep(index, q, p, q_next, status)


def gain_lower_bound(n: int, kappa: RationalLike) -> Fraction:
    """Return the lower bound of the per-step gain 1/q - 1/Q.

    Arguments:
        n: The spatial dimension, at least 2.
        kappa: The growth exponent κ.

    Returns:
        1 - 2κ/(2 + 4κ) for n = 2 and 2/n - κ(n-2)/n for n ≥ 3. The bound is 0 for the
        critical κ.

    Raises:
        ValueError: When n < 2.
        KappaError: When κ is inadmissible.

    """
    if n < 2:
        raise ValueError("The gain bound needs n ≥ 2")
    kappa = to_fraction(kappa)
    if classify_kappa(n, kappa) is KappaClass.INADMISSIBLE:
        raise KappaError(f"κ = {kappa} is inadmissible in dimension {n}")

    if n == 2:
        return 1 - 2 * kappa / (2 + 4 * kappa)
    return Fraction(2, n) - kappa * (n - 2) / n
