#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Discrete support calculus for partial convolutions along ω."""

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
from solitonlab.support.grid import Grid2, GriddedDistribution
from solitonlab.support.io import load_distribution, save_distribution, save_report
from solitonlab.support.titchmarsh import (
    TitchmarshReport,
    check_sharp_edges,
    check_titchmarsh_partial,
    edge_list,
)

__all__ = [
    "EdgeFunction",
    "Grid2",
    "GriddedDistribution",
    "TitchmarshReport",
    "check_sharp_edges",
    "check_titchmarsh_partial",
    "edge_list",
    "load_distribution",
    "lower_envelope",
    "oscillation",
    "partial_convolution",
    "save_distribution",
    "save_report",
    "sharp",
    "sigma",
    "support_edge_indices",
    "support_edges",
    "upper_envelope",
]
