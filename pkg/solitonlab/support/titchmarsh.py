#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Verification of the Titchmarsh theorem for partial convolutions."""

import logging
from typing import Any, Dict, List, Union

import numpy as np

from solitonlab.support.convolution import partial_convolution, sharp
from solitonlab.support.edges import (
    EdgeFunction,
    lower_envelope,
    oscillation,
    sigma,
    support_edge_indices,
    support_edges,
    upper_envelope,
)
from solitonlab.support.grid import GriddedDistribution
from solitonlab.utility import ReportLogging, ReprMixin

logger = logging.getLogger(__name__)

_ROUNDING = 1e-12


def edge_list(values: np.ndarray) -> List[Union[float, str]]:
    """Convert extended-real values to a json-able list.

    Arguments:
        values: The values, possibly with infinities.

    Returns:
        The list with ``inf`` and ``-inf`` written as strings.

    """
    return [float(value) if np.isfinite(value) else str(value) for value in values]


class TitchmarshReport(ReprMixin):  # pylint: disable=too-many-instance-attributes
    """This class defines the result of a partial Titchmarsh check.

    Arguments:
        a_conv: The lower edge of the convolution.
        a_sum: The sum of the lower edges of the factors.
        b_conv: The upper edge of the convolution.
        b_sum: The sum of the upper edges of the factors.
        lower_discrepancy: Per column |a_{f*g}^U - (a_f^U + a_g^U)|.
        lower_tolerance: Per column osc(a_f) + osc(a_g).
        upper_discrepancy: Per column |b_{f*g}^L - (b_f^L + b_g^L)|.
        upper_tolerance: Per column osc(b_f) + osc(b_g).
        index_additive: Whether first and last support indices add exactly.
        sigma_matches: Whether the support projection of f*g is that of f intersected with g.

    """

    _repr_attrs = ("passed", "index_additive", "sigma_matches", "max_lower_discrepancy")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        a_conv: EdgeFunction,
        a_sum: EdgeFunction,
        b_conv: EdgeFunction,
        b_sum: EdgeFunction,
        lower_discrepancy: np.ndarray,
        lower_tolerance: np.ndarray,
        upper_discrepancy: np.ndarray,
        upper_tolerance: np.ndarray,
        index_additive: bool,
        sigma_matches: bool,
    ) -> None:
        self.a_conv = a_conv
        self.a_sum = a_sum
        self.b_conv = b_conv
        self.b_sum = b_sum
        self.lower_discrepancy = lower_discrepancy
        self.lower_tolerance = lower_tolerance
        self.upper_discrepancy = upper_discrepancy
        self.upper_tolerance = upper_tolerance
        self.index_additive = index_additive
        self.sigma_matches = sigma_matches

    @property
    def max_lower_discrepancy(self) -> float:
        """Return the largest measured envelope discrepancy of the lower edges.

        Returns:
            The maximum over the checked columns, 0 when none is checked.

        """
        return _finite_max(self.lower_discrepancy)

    @property
    def max_upper_discrepancy(self) -> float:
        """Return the largest measured envelope discrepancy of the upper edges.

        Returns:
            The maximum over the checked columns, 0 when none is checked.

        """
        return _finite_max(self.upper_discrepancy)

    @property
    def envelope_additive(self) -> bool:
        """Whether the envelope discrepancies stay within one stencil oscillation.

        Returns:
            ``True`` when every checked column is within tolerance.

        """
        lower = _within(self.lower_discrepancy, self.lower_tolerance)
        upper = _within(self.upper_discrepancy, self.upper_tolerance)
        return lower and upper

    @property
    def passed(self) -> bool:
        """Whether all parts of the check passed.

        Returns:
            ``True`` when index additivity, the projection identity and the envelope
            bounds hold.

        """
        return self.index_additive and self.sigma_matches and self.envelope_additive

    def to_pyobj(self) -> Dict[str, Any]:
        """Dump the report to a python dict.

        Returns:
            A json-able dict with per-column arrays and the summary flags.

        """
        return {
            "a_conv": edge_list(self.a_conv.values),
            "a_sum": edge_list(self.a_sum.values),
            "b_conv": edge_list(self.b_conv.values),
            "b_sum": edge_list(self.b_sum.values),
            "lower_discrepancy": edge_list(self.lower_discrepancy),
            "lower_tolerance": edge_list(self.lower_tolerance),
            "upper_discrepancy": edge_list(self.upper_discrepancy),
            "upper_tolerance": edge_list(self.upper_tolerance),
            "index_additive": self.index_additive,
            "sigma_matches": self.sigma_matches,
            "envelope_additive": self.envelope_additive,
            "max_lower_discrepancy": self.max_lower_discrepancy,
            "max_upper_discrepancy": self.max_upper_discrepancy,
            "passed": self.passed,
        }


def _finite_max(values: np.ndarray) -> float:
    finite = values[np.isfinite(values)]
    return float(finite.max()) if finite.size else 0.0


def _within(discrepancy: np.ndarray, tolerance: np.ndarray) -> bool:
    checked = np.isfinite(discrepancy)
    slack = _ROUNDING * (1.0 + np.abs(tolerance[checked]))
    return bool(np.all(discrepancy[checked] <= tolerance[checked] + slack))


def _envelope_discrepancy(
    conv: EdgeFunction, left: EdgeFunction, right: EdgeFunction, upper: bool
) -> np.ndarray:
    envelope = upper_envelope if upper else lower_envelope
    measured = envelope(conv).values
    predicted = envelope(left).values + envelope(right).values
    checked = np.isfinite(measured) & np.isfinite(predicted)
    discrepancy = np.full(len(conv), np.inf)
    discrepancy[checked] = np.abs(measured[checked] - predicted[checked])
    return discrepancy


def check_titchmarsh_partial(f: GriddedDistribution, g: GriddedDistribution) -> TitchmarshReport:
    """Check the Titchmarsh theorem for the partial convolution of two distributions.

    Per column the support indices of f*g are compared with the sums of the support
    indices of f and g. On the envelope level a_{f*g}^U is compared with a_f^U + a_g^U
    and b_{f*g}^L with b_f^L + b_g^L, where the stencils are finite.

    Arguments:
        f: The first distribution.
        g: The second distribution, on the same grid.

    Returns:
        The :class:`TitchmarshReport`.

    """
    conv = partial_convolution(f, g)
    first_f, last_f = support_edge_indices(f)
    first_g, last_g = support_edge_indices(g)
    first_c, last_c = support_edge_indices(conv)

    both = (first_f >= 0) & (first_g >= 0)
    index_additive = bool(
        np.array_equal(first_c[both], first_f[both] + first_g[both])
        and np.array_equal(last_c[both], last_f[both] + last_g[both])
        and np.all(first_c[~both] == -1)
    )
    sigma_matches = bool(np.array_equal(sigma(conv), np.intersect1d(sigma(f), sigma(g))))

    a_f, b_f = support_edges(f)
    a_g, b_g = support_edges(g)
    a_c, b_c = support_edges(conv)

    a_sum = a_f + a_g
    b_sum = b_f + b_g

    report = TitchmarshReport(
        a_conv=a_c,
        a_sum=a_sum,
        b_conv=b_c,
        b_sum=b_sum,
        lower_discrepancy=_envelope_discrepancy(a_c, a_f, a_g, upper=True),
        lower_tolerance=oscillation(a_f) + oscillation(a_g),
        upper_discrepancy=_envelope_discrepancy(b_c, b_f, b_g, upper=False),
        upper_tolerance=oscillation(b_f) + oscillation(b_g),
        index_additive=index_additive,
        sigma_matches=sigma_matches,
    )
    logger.info("Titchmarsh check %s", "passed" if report.passed else "failed")
    logger.debug("%s", ReportLogging("TITCHMARSH", report.to_pyobj()))
    return report


def check_sharp_edges(f: GriddedDistribution) -> bool:
    """Check that the ♯ reflection maps the edges to a_{f♯} = -b_f and b_{f♯} = -a_f.

    Arguments:
        f: The distribution, on a symmetric ω axis.

    Returns:
        ``True`` when both identities hold in index arithmetic.

    """
    reflected = sharp(f)
    first, last = support_edge_indices(f)
    first_sharp, last_sharp = support_edge_indices(reflected)
    top = f.grid.n_omega - 1
    nonempty = first >= 0
    return bool(
        np.array_equal(first_sharp >= 0, nonempty)
        and np.array_equal(first_sharp[nonempty], top - last[nonempty])
        and np.array_equal(last_sharp[nonempty], top - first[nonempty])
    )
