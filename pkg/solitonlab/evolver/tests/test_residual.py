#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import logging

import numpy as np
import pytest

from solitonlab.evolver import RESIDUAL_TIMES, dirac_residual
from solitonlab.soliton import MultiFrequencyWave, build_nonlinearity, density_F


def _table(wave):
    return build_nonlinearity(density_F(wave), wave.potential.sample(wave.grid), wave.grid)


def _tolerance(wave, report):
    eigen = max(pair.residual for pair in wave.pairs)
    return 10 * (eigen + report.delta_r**2 * report.potential_norm)


class TestDiracResidual:
    def test_assembled_wave(self, wave, nonlinearity):
        report = dirac_residual(wave, nonlinearity)
        assert report.times == list(RESIDUAL_TIMES)
        assert not report.extended
        assert report.max_l2 <= _tolerance(wave, report)
        assert report.max_agreement <= _tolerance(wave, report)
        assert all(sup >= 0 for sup in report.sup)
        np.testing.assert_allclose(report.identity_l2, report.l2, rtol=1e-6)

    @pytest.mark.slow
    def test_refinement(self, wave, nonlinearity, refined_levels, dirac_potential):
        coarse = dirac_residual(wave, nonlinearity)
        refined = MultiFrequencyWave(*refined_levels, wave.amplitudes, dirac_potential)
        fine = dirac_residual(refined, _table(refined))

        assert fine.delta_r == pytest.approx(coarse.delta_r / 2)
        assert 3 <= coarse.max_l2 / fine.max_l2 <= 5
        assert fine.max_agreement <= _tolerance(refined, fine)

    def test_single_mode(self, wave):
        single = wave.with_amplitudes((1, 0, 0, 0))
        report = dirac_residual(single, _table(single))
        ground = single.pairs[0]
        assert report.max_l2 == pytest.approx(np.sqrt(4 * np.pi) * ground.residual, rel=1e-3)
        assert report.max_l2 <= _tolerance(single, report)

    def test_corrupted_nonlinearity(self, wave, nonlinearity):
        report = dirac_residual(wave, nonlinearity.scaled(1.1))
        assert 0.05 * report.potential_norm <= report.max_l2 <= 0.2 * report.potential_norm
        assert report.max_agreement <= _tolerance(wave, report)

    def test_extension(self, wave, nonlinearity, caplog):
        louder = wave.with_amplitudes([2 * value for value in wave.amplitudes])
        with caplog.at_level(logging.WARNING):
            report = dirac_residual(louder, nonlinearity, times=(0.0,))
        assert report.extended
        assert "above τ_max" in caplog.text

    def test_pyobj(self, wave, nonlinearity):
        contents = dirac_residual(wave, nonlinearity, times=(0.0, 0.5)).to_pyobj()
        assert contents["times"] == [0.0, 0.5]
        assert len(contents["l2"]) == 2
        assert contents["max_l2"] == max(contents["l2"])
        assert contents["extended"] is False
