#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solitonlab.exception import GridMismatchError
from solitonlab.support import (
    EdgeFunction,
    Grid2,
    GriddedDistribution,
    lower_envelope,
    oscillation,
    sigma,
    support_edge_indices,
    support_edges,
    upper_envelope,
)

_EXTENDED = st.one_of(
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
    st.just(np.inf),
    st.just(-np.inf),
)
_FINITE = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


def _edge(values):
    values = np.asarray(values, dtype=np.float64)
    return EdgeFunction(np.arange(len(values), dtype=np.float64), values)


def _finite_pairs():
    return st.integers(min_value=1, max_value=40).flatmap(
        lambda size: st.tuples(
            st.lists(_FINITE, min_size=size, max_size=size),
            st.lists(_FINITE, min_size=size, max_size=size),
        )
    )


class TestEnvelopes:
    def test_constant(self):
        mu = _edge([2.5] * 6)
        assert np.array_equal(lower_envelope(mu).values, mu.values)
        assert np.array_equal(upper_envelope(mu).values, mu.values)

    def test_spike(self):
        mu = _edge([0, 0, 5, 0, 0])
        assert np.array_equal(lower_envelope(mu).values, [0, 0, 0, 0, 0])
        assert np.array_equal(upper_envelope(mu).values, [0, 5, 5, 5, 0])

    def test_infinite_value(self):
        mu = _edge([1.0, 2.0, np.inf, 3.0, 4.0, 5.0])
        assert np.all(np.isfinite(lower_envelope(mu).values))
        assert np.array_equal(
            upper_envelope(mu).values, [2.0, np.inf, np.inf, np.inf, 5.0, 5.0]
        )

    def test_oscillation(self):
        mu = _edge([0.0, 1.0, 3.0, np.inf])
        assert np.array_equal(oscillation(mu), [1.0, 3.0, np.inf, np.inf])

    def test_axis_mismatch(self):
        with pytest.raises(GridMismatchError):
            _ = _edge([0.0, 1.0]) + _edge([0.0, 1.0, 2.0])

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            _edge([0.0, np.nan])

    @settings(max_examples=1000, derandomize=True, deadline=None)
    @given(st.lists(_EXTENDED, min_size=1, max_size=40))
    def test_sandwich(self, values):
        mu = _edge(values)
        assert np.all(lower_envelope(mu).values <= mu.values)
        assert np.all(mu.values <= upper_envelope(mu).values)

    @settings(max_examples=1000, derandomize=True, deadline=None)
    @given(_finite_pairs())
    def test_superadditivity(self, pair):
        mu, nu = _edge(pair[0]), _edge(pair[1])
        total = mu + nu
        assert np.all(
            lower_envelope(total).values >= lower_envelope(mu).values + lower_envelope(nu).values
        )
        assert np.all(
            upper_envelope(total).values <= upper_envelope(mu).values + upper_envelope(nu).values
        )

    @settings(max_examples=1000, derandomize=True, deadline=None)
    @given(st.lists(_EXTENDED, min_size=1, max_size=40))
    def test_nested_envelopes(self, values):
        mu = _edge(values)
        assert np.all(lower_envelope(upper_envelope(mu)).values >= mu.values)
        assert np.all(upper_envelope(lower_envelope(mu)).values <= mu.values)


def _interval_distribution(first, last, n_omega):
    n_x = len(first)
    grid = Grid2(-1.0, 1.0, n_x, -1.0, 1.0, n_omega)
    values = np.zeros(grid.shape, dtype=np.complex128)
    for index, (low, high) in enumerate(zip(first, last)):
        if low >= 0:
            values[index, low : high + 1] = 1.0
    return GriddedDistribution(grid, values)


class TestSupportEdges:
    def test_zero(self):
        grid = Grid2(0.0, 1.0, 5, -1.0, 1.0, 11)
        f = GriddedDistribution(grid, np.zeros(grid.shape))
        a, b = support_edges(f)
        assert np.all(a.values == np.inf)
        assert np.all(b.values == -np.inf)
        assert sigma(f).size == 0

    def test_indicator(self):
        grid = Grid2(0.0, 1.0, 4, 0.0, 3.0, 31)
        f = GriddedDistribution.from_function(
            grid, lambda x, omega: (np.abs(omega - 1.5) <= 0.5 + 1e-9).astype(float)
        )
        a, b = support_edges(f)
        assert np.allclose(a.values, 1.0)
        assert np.allclose(b.values, 2.0)

    def test_cone(self):
        grid = Grid2(-2.0, 2.0, 41, 0.0, 4.0, 41)
        first = np.abs(np.arange(41) - 20)
        f = _interval_distribution(first, np.full(41, 30), 41)
        a, b = support_edges(f)
        assert np.allclose(a.values, np.abs(grid.x_axis), atol=grid.delta_omega)
        assert np.allclose(b.values, 3.0)
        assert np.array_equal(sigma(f), np.arange(41))

    def test_single_sample(self):
        grid = Grid2(0.0, 1.0, 6, -1.0, 1.0, 9)
        values = np.zeros(grid.shape)
        values[3, 5] = 0.2
        f = GriddedDistribution(grid, values)
        first, last = support_edge_indices(f)
        assert np.array_equal(sigma(f), [3])
        assert first[3] == last[3] == 5
        assert np.all(np.delete(first, 3) == -1)

    def test_infinities_pair_up(self):
        first = np.array([-1, 2, 3, -1, 1])
        last = np.array([-1, 4, 3, -1, 6])
        a, b = support_edges(_interval_distribution(first, last, 9))
        assert np.array_equal(a.values == np.inf, b.values == -np.inf)
        assert np.all(a.values[a.finite] <= b.values[b.finite])

    def test_threshold(self):
        grid = Grid2(0.0, 1.0, 2, 0.0, 1.0, 3)
        values = np.array([[1e-8, 1.0, 1e-8], [0.0, 0.0, 1.0]])
        f = GriddedDistribution(grid, values).with_relative_threshold(1e-6)
        first, last = support_edge_indices(f)
        assert np.array_equal(first, [1, 2])
        assert np.array_equal(last, [1, 2])

    def test_edge_chain(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            n_x = int(rng.integers(2, 30))
            centers = 16 + np.clip(np.cumsum(rng.integers(-1, 2, size=n_x)), -8, 8)
            widths = rng.integers(1, 4, size=n_x)
            f = _interval_distribution(centers - widths, centers + widths, 33)
            a, b = support_edges(f)
            a_upper = upper_envelope(a).values
            b_lower = lower_envelope(b).values
            assert np.all(a.values <= a_upper)
            assert np.all(a_upper <= b.values)
            assert np.all(a.values <= b_lower)
            assert np.all(b_lower <= b.values)
