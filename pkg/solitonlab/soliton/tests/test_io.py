#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import numpy as np

from solitonlab.soliton import load_bundle, save_bundle, validate_wave
from solitonlab.utility import read_json


def test_bundle(tmp_path, wave, nonlinearity):
    report = validate_wave(wave).to_pyobj()
    directory = save_bundle(wave, nonlinearity, tmp_path / "bundle", report)
    assert sorted(path.name for path in directory.iterdir()) == [
        "nonlinearity.csv",
        "potential.csv",
        "potential.json",
        "profiles.csv",
        "wave.json",
    ]
    contents = read_json(directory / "wave.json")
    assert contents["amplitudes"] == [[1.0, 0.0], [0.1, 0.0], [0.2, 0.0], [0.02, 0.0]]
    assert contents["validation"]["passed"] is True

    loaded, table = load_bundle(directory)
    assert loaded.frequencies == wave.frequencies
    assert loaded.amplitudes == wave.amplitudes
    assert loaded.grid == wave.grid
    assert [pair.node_count for pair in loaded.pairs] == [0, 1]
    assert loaded.potential.parameters() == wave.potential.parameters()
    for left, right in zip(loaded.frame.m, wave.frame.m):
        np.testing.assert_array_equal(left, right)
    for left, right in zip(loaded.pairs, wave.pairs):
        np.testing.assert_allclose(left.v, right.v, rtol=1e-12, atol=1e-300)
        np.testing.assert_allclose(left.u, right.u, rtol=1e-12, atol=1e-300)
    np.testing.assert_allclose(table.knots, nonlinearity.knots, rtol=1e-12)
    np.testing.assert_allclose(table.values, nonlinearity.values, rtol=1e-12)
