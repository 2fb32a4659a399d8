#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import numpy as np
import pytest

from solitonlab.exception import DensityMismatchError
from solitonlab.soliton import (
    BETA,
    MultiFrequencyWave,
    SpinorFrame,
    beta_density,
    beta_orthogonality_report,
    density_deviation,
    density_F,
    monotonicity_violation,
    positivity_violation,
    scan_amplitude_margin,
    validate_wave,
)


def _product(left, right):
    return np.einsum("...a,ab,...b->...", np.conj(left.samples), BETA, right.samples)


class TestMultiFrequencyWave:
    def test_frequencies(self, wave, dirac_levels):
        ground, excited = dirac_levels
        assert wave.frequencies == (ground.omega, excited.omega)
        assert len(wave.profiles) == 4
        assert [profile.kind for profile in wave.profiles] == ["phi", "phi", "chi", "chi"]

    def test_invalid_order(self, dirac_potential, dirac_levels):
        ground, excited = dirac_levels
        with pytest.raises(ValueError):
            MultiFrequencyWave(excited, ground, (1, 0, 0, 0), dirac_potential)
        with pytest.raises(ValueError):
            MultiFrequencyWave(ground, excited, (1, 0, 0), dirac_potential)

    def test_field(self, wave):
        t = 0.37
        expected = sum(
            coefficient * profile.samples for coefficient, _, profile in wave.modes(t)
        )
        np.testing.assert_array_equal(wave.field(t), expected)
        a0 = wave.amplitudes[0]
        assert wave.modes(t)[0][0] == pytest.approx(a0 * np.exp(-1j * wave.frequencies[0] * t))
        assert wave.modes(t)[2][1] == -wave.frequencies[0]


class TestDensity:
    def test_single_mode(self, wave):
        single = wave.with_amplitudes((1, 0, 0, 0))
        ground = single.pairs[0]
        np.testing.assert_array_equal(density_F(single), ground.v**2 - ground.u**2)

    def test_weighted_levels(self, wave):
        weighted = wave.with_amplitudes((1, 0.3, 0.2, 0.06))
        ground, excited = weighted.pairs
        expected = 0.96 * (ground.v**2 - ground.u**2) + 0.0864 * (excited.v**2 - excited.u**2)
        scale = np.abs(expected).max()
        np.testing.assert_allclose(density_F(weighted), expected, rtol=0, atol=1e-13 * scale)

    def test_mismatch(self, wave):
        with pytest.raises(DensityMismatchError, match="deviates from F"):
            density_F(wave.with_amplitudes((1, 0.1, 0.2, 0.1)))

    @pytest.mark.parametrize(
        "amplitudes", [(1, 0.1, 0.2, 0.02), (1, 0.1j, 0.2, -0.02j), (0.8, 0.05, 0.1, 0.00625)]
    )
    def test_time_independent(self, wave, amplitudes):
        deviation, _ = density_deviation(wave.with_amplitudes(amplitudes))
        assert deviation <= 1e-12

    def test_cross_levels(self, wave):
        # b̄₀a₁ ≠ b̄₁a₀ leaves a beat term of frequency ω₀ + ω₁
        deviation, radius = density_deviation(wave.with_amplitudes((1, 0.1, 0.2, 0.1)))
        assert deviation > 1e-6
        assert 0 < radius < wave.grid.r_max

    def test_direct_contraction(self, wave):
        samples = wave.field(1.1)
        np.testing.assert_allclose(
            beta_density(samples),
            np.broadcast_to(density_F(wave), samples.shape[:2]),
            atol=1e-12 * density_F(wave).max(),
        )


class TestBetaOrthogonality:
    def test_equal_levels_pointwise(self, wave):
        for phi, chi in zip(wave.phi, wave.chi):
            scale = np.abs(phi.samples).max() ** 2
            assert np.abs(_product(chi, phi)).max() <= 1e-15 * scale

    def test_orthogonal_frame(self, wave):
        scale = np.abs(wave.phi[0].samples).max() ** 2
        assert np.abs(_product(wave.phi[0], wave.phi[1])).max() <= 1e-15 * scale
        report = beta_orthogonality_report(wave.profiles)
        assert report.passed
        assert report.pointwise <= 1e-15 * scale
        assert report.norms == pytest.approx([4 * np.pi] * 4, rel=1e-6)

    def test_cross_levels_integrate_to_zero(self, wave):
        canonical = MultiFrequencyWave(
            *wave.pairs, wave.amplitudes, wave.potential, SpinorFrame.canonical()
        )
        scale = np.abs(canonical.phi[0].samples).max() ** 2
        assert np.abs(_product(canonical.chi[0], canonical.phi[1])).max() > 1e-3 * scale
        assert beta_orthogonality_report(canonical.profiles).passed

    def test_non_orthogonal_frame(self, wave):
        ground, excited = wave.pairs
        frame = SpinorFrame((1, 0), (1, 0), (0, 1), (-1, 0))
        report = beta_orthogonality_report(
            MultiFrequencyWave(*wave.pairs, wave.amplitudes, wave.potential, frame).profiles
        )
        assert not report.passed
        assert "φ0/φ1" in report.flagged
        expected = 4 * np.pi * ground.grid.integrate(ground.v * excited.v - ground.u * excited.u)
        assert report.matrix[0, 1] == pytest.approx(abs(expected), rel=1e-10)

    def test_to_pyobj(self, wave):
        contents = beta_orthogonality_report(wave.profiles).to_pyobj()
        assert contents["labels"] == ["φ0", "φ1", "χ0", "χ1"]
        assert len(contents["matrix"]) == 4
        assert contents["passed"] is True


class TestValidateWave:
    def test_default_amplitudes(self, wave):
        report = validate_wave(wave)
        assert report.passed, report.failures
        assert list(report) == [
            "F_positive",
            "F_decreasing",
            "v0_positive",
            "amplitude_order",
            "time_independent",
        ]

    def test_structural_only(self, wave):
        report = validate_wave(wave.with_amplitudes((1, 0.1, 0.2, 0.1)))
        assert report.failures == ["time_independent"]
        assert report["time_independent"].radius is not None

    def test_large_excess(self, wave):
        report = validate_wave(wave.with_amplitudes((1, 2.0, 0.2, 0.4)))
        assert not report["F_decreasing"].passed
        assert 0 < report["F_decreasing"].radius < wave.grid.r_max

    def test_equal_leading_amplitudes(self, wave):
        report = validate_wave(wave.with_amplitudes((0.2, 0.1, 0.2, 0.1)))
        assert not report["amplitude_order"].passed
        assert report["amplitude_order"].value == 0.0
        assert not report.passed

    def test_to_pyobj(self, wave):
        contents = validate_wave(wave).to_pyobj()
        assert contents["passed"] is True
        assert contents["conditions"]["v0_positive"] == {
            "passed": True,
            "radius": None,
            "value": None,
        }


class TestViolations:
    _NODES = np.arange(6.0)

    def test_positivity(self):
        assert positivity_violation(np.array([5, 4, 3, 0, -1, -1e-20]), self._NODES, 1e-12) == 4
        assert positivity_violation(np.array([5, 4, 3, 2, 1, -1e-20]), self._NODES, 1e-12) is None
        assert positivity_violation(np.array([0, 4, 3, 2, 1, 0]), self._NODES, 1e-12) == 0

    def test_monotonicity(self):
        assert monotonicity_violation(np.array([5, 4, 4, 2, 1, 0]), self._NODES, 1e-12) == 2
        assert monotonicity_violation(np.array([5, 4, 3, 2, 0, 0]), self._NODES, 1e-12) is None


class TestAmplitudeMargin:
    def test_margin(self, wave):
        margin = scan_amplitude_margin(wave)
        assert margin.lower is not None and margin.upper is not None
        assert margin.lower <= 0 <= margin.upper
        assert margin.contains(0.0)
        assert margin.upper > 0

        failing = margin.samples[~margin.passed & (margin.samples > 0)]
        if failing.size:
            assert not margin.contains(failing[0])
            assert np.all(np.isfinite(margin.radii[~margin.passed]))

    def test_invalid(self, wave):
        with pytest.raises(ValueError):
            scan_amplitude_margin(wave.with_amplitudes((0.1, 0.1, 0.2, 0.0)))

    def test_to_pyobj(self, wave):
        contents = scan_amplitude_margin(wave, decades=2, per_decade=1).to_pyobj()
        assert len(contents["samples"]) == 7
        assert contents["samples"][3] == 0.0
