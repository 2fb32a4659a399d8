#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import json

import numpy as np

from solitonlab.support import (
    Grid2,
    GriddedDistribution,
    check_titchmarsh_partial,
    load_distribution,
    save_distribution,
    save_report,
)


class TestDistributionFiles:
    def test_save_load(self, tmp_path):
        rng = np.random.default_rng(11)
        grid = Grid2(-1.0, 1.0, 4, -2.0, 2.0, 9)
        values = rng.normal(size=grid.shape) + 1j * rng.normal(size=grid.shape)
        f = GriddedDistribution(grid, values, 0.125)

        descriptor = save_distribution(f, tmp_path / "f.json")
        contents = json.loads(descriptor.read_text())
        assert contents["data_path"] == "f.csv"
        assert contents["threshold"] == 0.125
        assert (tmp_path / "f.csv").read_text().splitlines()[0].startswith('"x"')

        loaded = load_distribution(descriptor)
        assert loaded.grid == grid
        assert loaded.support_threshold == 0.125
        assert np.allclose(loaded.values, values, rtol=1e-12, atol=1e-15)

    def test_save_report(self, tmp_path):
        grid = Grid2(0.0, 1.0, 3, 0.0, 1.0, 5)
        f = GriddedDistribution(grid, np.ones(grid.shape))
        save_report(check_titchmarsh_partial(f, f), tmp_path / "report.json")
        contents = json.loads((tmp_path / "report.json").read_text())
        assert contents["passed"] is True
        assert contents["index_additive"] is True
