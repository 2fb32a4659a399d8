#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Bootstrap traces: running the induction to termination and exporting the result."""

import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from solitonlab.bootstrap.exponent import (
    BootstrapState,
    BootstrapStep,
    Exponent,
    RationalLike,
    Status,
    format_exponent,
    gain_lower_bound,
    initial_exponent,
    step,
    to_fraction,
)
from solitonlab.exception import BootstrapError
from solitonlab.nonlinearity import KappaClass, classify_kappa
from solitonlab.utility import ReprMixin, write_csv

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 64


class BootstrapTrace(ReprMixin):
    """This class defines the ordered exponents of a bootstrap run and its terminal status.

    Arguments:
        n: The spatial dimension.
        kappa: The growth exponent.
        states: The finite exponents visited, q₀ first.
        steps: The step records.
        status: The terminal status.

    """

    _repr_attrs = ("n", "kappa", "states", "status")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        n: int,
        kappa: Fraction,
        states: List[Exponent],
        steps: List[BootstrapStep],
        status: Status,
    ) -> None:
        self.n = n
        self.kappa = kappa
        self.states = states
        self.steps = steps
        self.status = status

    def __len__(self) -> int:
        return len(self.states)

    @property
    def gain_bound(self) -> Optional[Fraction]:
        """Return the per-step gain bound of this run.

        Returns:
            The bound, ``None`` when n = 1 or κ is inadmissible.

        """
        if self.n < 2 or classify_kappa(self.n, self.kappa) is KappaClass.INADMISSIBLE:
            return None
        return gain_lower_bound(self.n, self.kappa)

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the trace to a python dict.

        Returns:
            A python dict of the form::

                {
                    "n": <int>,
                    "kappa": <str>,
                    "states": [<str>, ...],
                    "status": <str>,
                    "gain_bound": <str or None>,
                    "steps": [<step dict>, ...]
                }

        """
        bound = self.gain_bound
        return {
            "n": self.n,
            "kappa": str(self.kappa),
            "states": [format_exponent(q) for q in self.states],
            "status": self.status.name,
            "gain_bound": str(bound) if bound is not None else None,
            "steps": [record.to_pyobj() for record in self.steps],
        }


def step_bound(n: int, kappa: RationalLike) -> Optional[int]:
    """Return the largest number of states an admissible run may visit.

    Arguments:
        n: The spatial dimension.
        kappa: The growth exponent.

    Returns:
        ceil((1/q₀)/gain) + 1, or ``None`` when the gain bound is not positive or n ≤ 1.

    """
    if n < 2:
        return None
    kappa = to_fraction(kappa)
    if classify_kappa(n, kappa) is not KappaClass.ADMISSIBLE:
        return None

    gain = gain_lower_bound(n, kappa)
    q0: Fraction = initial_exponent(n, kappa)  # type: ignore[assignment]
    return math.ceil((1 / q0) / gain) + 1


def gain_step_bound(n: int, kappa: RationalLike) -> Optional[int]:
    """Return the largest number of steps an admissible run may take in dimension n ≥ 3.

    Every state has 1/q in (0, 1/2] and each step raises 1/q by at least the gain bound.

    Arguments:
        n: The spatial dimension.
        kappa: The growth exponent.

    Returns:
        floor(1/(2·gain)) + 2, or ``None`` when n < 3 or κ is not admissible.

    """
    if n < 3:
        return None
    kappa = to_fraction(kappa)
    if classify_kappa(n, kappa) is not KappaClass.ADMISSIBLE:
        return None
    return math.floor(Fraction(1, 2) / gain_lower_bound(n, kappa)) + 2


def run(n: int, kappa: RationalLike, max_iter: int = DEFAULT_MAX_ITER) -> BootstrapTrace:
    """Iterate the bootstrap step from q₀ until it is done, stalls or diverges.

    Arguments:
        n: The spatial dimension.
        kappa: The growth exponent κ > 0.
        max_iter: The largest number of steps.

    Returns:
        The :class:`BootstrapTrace`.

    Raises:
        ValueError: When max_iter < 1.
        BootstrapError: When an admissible run exceeds one of its step bounds.

    """
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    kappa = to_fraction(kappa)
    q = initial_exponent(n, kappa)
    if q == math.inf:
        logger.info("Bootstrap n=%d: nothing to do", n)
        return BootstrapTrace(n, kappa, [], [], Status.DONE)

    states: List[Exponent] = [q]
    steps: List[BootstrapStep] = []
    status = Status.MAX_ITER
    for index in range(1, max_iter + 1):
        record = step(BootstrapState(n, kappa, q), index)
        steps.append(record)
        if record.outcome is not Status.ADVANCED:
            status = record.outcome
            break
        q = record.next_exponent
        states.append(q)

    bound = step_bound(n, kappa)
    if bound is not None and len(states) > bound:
        raise BootstrapError(f"{len(states)} states exceed the step bound {bound}")
    limit = gain_step_bound(n, kappa)
    if limit is not None and len(steps) > limit:
        raise BootstrapError(f"{len(steps)} steps exceed the gain step bound {limit}")

    logger.info(
        "Bootstrap n=%d κ=%s: %s after %d step(s)", n, kappa, status.name, len(steps)
    )
    return BootstrapTrace(n, kappa, states, steps, status)


def save_trace_csv(trace: BootstrapTrace, path: Union[str, Path]) -> None:
    """Save the steps of a trace as CSV with the columns step, q, P and Q.

    Arguments:
        trace: The trace.
        path: The output path.

    """
    records = trace.steps
    write_csv(
        {
            "step": np.array([record.index for record in records], dtype=np.int64),
            "q": np.array([record.q for record in records], dtype=str),
            "P": np.array([record.p for record in records], dtype=str),
            "Q": np.array([record.q_next for record in records], dtype=str),
        },
        path,
    )
