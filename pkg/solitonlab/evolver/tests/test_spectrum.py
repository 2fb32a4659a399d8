#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import numpy as np
import pytest

from solitonlab.evolver import (
    PeriodicGrid,
    Trajectory1D,
    evolve_nlkg,
    evolve_nls,
    modulus_spectrum,
    modulus_variance,
    time_spectrum,
    variance_spectrum_coupling,
)
from solitonlab.exception import TooFewSnapshotsError
from solitonlab.nonlinearity import Polynomial, PolynomialNonlinearity
from solitonlab.support import support_edges
from solitonlab.utility import read_csv

FOCUSING = PolynomialNonlinearity(Polynomial([0, -1]))
LINEAR = PolynomialNonlinearity(Polynomial())

# 255 snapshots spanning a period of 8π put ω on multiples of 1/4.
SNAPSHOTS = 255
PERIOD = 8 * np.pi


def _soliton(grid, omega, center):
    # α(τ) = -τ: φ = √(-2ω) sech(√(-ω)(x - x₀)) solves ωφ = -φ'' - φ³
    return np.sqrt(-2 * omega) / np.cosh(np.sqrt(-omega) * (grid.nodes - center))


def _tones(frequencies, snapshots=SNAPSHOTS, period=PERIOD):
    grid = PeriodicGrid(np.pi, 8)
    step = period / snapshots
    times = step * np.arange(snapshots)
    signal = sum(np.exp(-1j * omega * times) for omega in frequencies)
    u = np.repeat(signal[:, None], grid.n_x, axis=1)
    return Trajectory1D(grid, step, 1, u)


@pytest.fixture(scope="module")
def soliton_run():
    grid = PeriodicGrid(32.0, 512)
    stride = 160
    dt = PERIOD / (SNAPSHOTS * stride)
    u0 = _soliton(grid, -1.0, 0.0)
    return evolve_nls(u0, grid, FOCUSING, dt, (SNAPSHOTS - 1) * stride * dt, stride=stride)


class TestTimeSpectrum:
    def test_soliton(self, soliton_run):
        probe, distribution = time_spectrum(soliton_run, [-2.0, -1.0, 0.0, 1.0, 2.0])
        assert len(probe) == 5
        assert probe.window == "hann"
        assert probe.delta_omega == pytest.approx(0.25)
        assert probe.parseval_error <= 1e-8

        lower, upper = probe.edges(1e-6)
        np.testing.assert_allclose(lower, -1.0, atol=probe.delta_omega)
        np.testing.assert_allclose(upper, -1.0, atol=probe.delta_omega)
        assert probe.single_bin(1e-6).all()
        assert variance_spectrum_coupling(probe, soliton_run, 1e-6) == []

        assert distribution is not None
        assert distribution.grid.is_symmetric()
        a, b = support_edges(distribution)
        assert np.all(a.values >= -1.0 - 2 * probe.delta_omega - 1e-9)
        assert np.all(b.values <= -1.0 + 2 * probe.delta_omega + 1e-9)

    def test_stationary(self):
        trajectory = _tones([0.0])
        probe, _ = time_spectrum(trajectory, [0.0])
        lower, upper = probe.edges()
        assert lower[0] == pytest.approx(0.0, abs=1e-12)
        assert upper[0] == pytest.approx(0.0, abs=1e-12)

    def test_two_tones(self):
        trajectory = _tones([-1.0, 0.5])
        probe, _ = time_spectrum(trajectory, [0.0])
        lower, upper = probe.edges()
        assert lower[0] == pytest.approx(-1.0)
        assert upper[0] == pytest.approx(0.5)
        assert upper[0] - lower[0] == pytest.approx(1.5, abs=probe.delta_omega)
        np.testing.assert_allclose(probe.peaks(0), [-1.0, 0.5], atol=1e-12)
        assert not probe.single_bin()[0]

    def test_two_solitons(self):
        grid = PeriodicGrid(40.0, 1024)
        stride = 80
        period = 2 * PERIOD
        dt = period / (SNAPSHOTS * stride)
        u0 = _soliton(grid, -1.0, -10.0) + _soliton(grid, -0.5, 10.0)
        trajectory = evolve_nls(
            u0, grid, FOCUSING, dt, (SNAPSHOTS - 1) * stride * dt, stride=stride
        )
        probe, _ = time_spectrum(trajectory, [0.0])
        assert probe.delta_omega == pytest.approx(0.125)
        peaks = probe.peaks(0, relative=0.02)
        np.testing.assert_allclose(peaks, [-1.0, -0.5], atol=probe.delta_omega)

    def test_linear_klein_gordon(self):
        # m = 0.6, k = 0.8: ω = √(m² + k²) = 1
        grid = PeriodicGrid(1.25 * np.pi, 32)
        dt = PERIOD / SNAPSHOTS
        u0 = np.exp(0.8j * grid.nodes)
        linear = evolve_nlkg(u0, -1j * u0, grid, 0.6, LINEAR, dt, (SNAPSHOTS - 1) * dt)
        probe, _ = time_spectrum(linear, [0.0])
        lower, upper = probe.edges()
        assert lower[0] == pytest.approx(1.0, abs=probe.delta_omega)
        assert upper[0] == pytest.approx(1.0, abs=probe.delta_omega)

    def test_time_translation(self):
        grid = PeriodicGrid(1.25 * np.pi, 32)
        dt = PERIOD / SNAPSHOTS
        u0 = np.exp(0.8j * grid.nodes)
        short = evolve_nlkg(u0, -1j * u0, grid, 0.6, LINEAR, dt, (SNAPSHOTS - 1) * dt)
        long = evolve_nlkg(u0, -1j * u0, grid, 0.6, LINEAR, dt, 2 * (SNAPSHOTS - 1) * dt)
        tail = Trajectory1D(grid, dt, 1, long.u[SNAPSHOTS - 1 :])

        short_probe, _ = time_spectrum(short, [0.0])
        tail_probe, _ = time_spectrum(tail, [0.0])
        np.testing.assert_allclose(
            short_probe.peaks(0), tail_probe.peaks(0), atol=short_probe.delta_omega
        )

    def test_frequency_hint(self):
        # Δt_s = 0.1 over T = 20: the plain axis step 2π/20.1 misses ω = -1
        trajectory = _tones([-1.0], snapshots=201, period=20.1)
        trajectory.u *= np.sqrt(2)
        plain, _ = time_spectrum(trajectory, [0.0])
        assert not plain.single_bin()[0]

        probe, distribution = time_spectrum(trajectory, [0.0, np.pi / 4], frequency=-1.0)
        assert probe.window == "hann-matched"
        assert probe.delta_omega == pytest.approx(1 / 3)
        assert probe.omega[0] == pytest.approx(-probe.omega[-1])
        assert probe.parseval_error <= 1e-8
        assert probe.single_bin().all()
        lower, upper = probe.edges()
        np.testing.assert_allclose(lower, -1.0, atol=1e-9)
        np.testing.assert_allclose(upper, -1.0, atol=1e-9)
        np.testing.assert_allclose(probe.peaks(0), [-1.0], atol=1e-9)

        assert distribution.grid.is_symmetric()
        assert distribution.grid.shape == (2, len(probe.omega))

    def test_short_frequency_hint(self):
        trajectory = _tones([-1.0], snapshots=201, period=20.1)
        probe, _ = time_spectrum(trajectory, [0.0], frequency=-0.1)
        assert probe.window == "hann"
        assert probe.delta_omega == pytest.approx(2 * np.pi / 20.1)

    def test_even_count(self):
        trajectory = _tones([0.5], snapshots=40, period=10 * np.pi)
        probe, _ = time_spectrum(trajectory, [0.0])
        assert len(probe.omega) == 39
        assert probe.omega[0] == pytest.approx(-probe.omega[-1])

    def test_too_few_snapshots(self):
        with pytest.raises(TooFewSnapshotsError):
            time_spectrum(_tones([0.5], snapshots=15), [0.0])

    def test_probe_layout(self):
        trajectory = _tones([0.5])
        _, single = time_spectrum(trajectory, [0.0])
        assert single is None
        _, irregular = time_spectrum(trajectory, [-np.pi, 0.0, np.pi / 4])
        assert irregular is None
        probe, distribution = time_spectrum(trajectory, [0.1, 0.8])
        np.testing.assert_allclose(probe.positions, [0.0, np.pi / 4])
        assert distribution.grid.shape == (2, SNAPSHOTS)

    def test_save_csv(self, tmp_path):
        probe, _ = time_spectrum(_tones([0.5]), [0.0, np.pi / 4])
        probe.save_csv(tmp_path / "spectrum.csv")
        columns = read_csv(tmp_path / "spectrum.csv")
        assert len(columns) == 5
        np.testing.assert_allclose(columns["omega"], probe.omega)
        np.testing.assert_allclose(columns["re(0)"], probe.values[0].real)

    def test_pyobj(self):
        probe, _ = time_spectrum(_tones([0.5]), [0.0])
        contents = probe.to_pyobj()
        assert contents["window"] == "hann"
        assert contents["a"] == [pytest.approx(0.5)]
        assert contents["b"] == [pytest.approx(0.5)]


class TestModulus:
    def test_variance_soliton(self, soliton_run):
        assert modulus_variance(soliton_run).max() <= 1e-8

    def test_variance_beat(self):
        # |u|² = 2 + 2cos(1.5t) over six beat periods
        variance = modulus_variance(_tones([-1.0, 0.5]))
        np.testing.assert_allclose(variance, 0.5, rtol=1e-10)

    def test_variance_zero(self):
        grid = PeriodicGrid(np.pi, 8)
        trajectory = Trajectory1D(grid, 0.1, 1, np.zeros((20, 8), dtype=complex))
        np.testing.assert_array_equal(modulus_variance(trajectory), 0.0)

    def test_variance_partial_zero(self):
        grid = PeriodicGrid(np.pi, 4)
        u = np.zeros((20, 4), dtype=complex)
        u[:, 1] = 1.0
        np.testing.assert_array_equal(modulus_variance(Trajectory1D(grid, 0.1, 1, u)), 0.0)

    def test_modulus_spectrum(self):
        trajectory = _tones([-1.0, 0.5])
        probe, distribution = time_spectrum(trajectory, [0.0, np.pi / 4])
        modulus, report = modulus_spectrum(distribution)

        assert report.index_additive
        assert modulus.grid == distribution.grid.doubled()
        a, b = support_edges(modulus)
        width = 1.5 + 2 * probe.delta_omega
        np.testing.assert_allclose(a.values, -width)
        np.testing.assert_allclose(b.values, width)
