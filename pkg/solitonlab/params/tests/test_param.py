#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

from fractions import Fraction

import pytest

from solitonlab.exception import ConfigError
from solitonlab.params import Param, Params, param, ptype

PARAMS = Params.from_factories(
    n=param(ptype=ptype.Integer),
    kappa=param(ptype=ptype.Rational),
    model=param("nls", ("nls", "nlkg"), ptype.String),
    dt=param(0.1, ptype=ptype.Number),
    probes=param([0.0], ptype=ptype.NumberArray),
)


class TestPType:
    @pytest.mark.parametrize("value", [True, 1.0, "1"])
    def test_integer(self, value):
        with pytest.raises(TypeError):
            ptype.Integer.check(value)

    def test_number(self):
        assert ptype.Number.check(1) == 1.0
        assert ptype.Number.check("1e-6") == 1e-6
        assert ptype.Number.check(Fraction(1, 4)) == 0.25
        with pytest.raises(TypeError):
            ptype.Number.check("one")
        with pytest.raises(TypeError):
            ptype.Number.check(False)

    def test_rational(self):
        assert ptype.Rational.check("9/5") == Fraction(9, 5)
        assert ptype.Rational.check(2) == Fraction(2)
        assert ptype.Rational.dump(Fraction(9, 5)) == "9/5"
        with pytest.raises(TypeError):
            ptype.Rational.check(1.8)
        with pytest.raises(TypeError):
            ptype.Rational.check("9//5")

    def test_coefficients(self):
        assert ptype.Coefficients.check([0, " 1/2 ", 1.5]) == [0, "1/2", 1.5]
        with pytest.raises(TypeError):
            ptype.Coefficients.check(1)
        with pytest.raises(TypeError):
            ptype.Coefficients.check([True])
        with pytest.raises(TypeError):
            ptype.Coefficients.check(["x"])

    def test_number_array(self):
        assert ptype.NumberArray.check((1, "2.5")) == [1.0, 2.5]
        with pytest.raises(TypeError):
            ptype.NumberArray.check(1.0)


class TestParams:
    def test_param(self):
        required = Param("n", ptype=ptype.Integer)
        assert required.required
        optional = Param("model", "nls", ("nls", "nlkg"), ptype.String)
        assert not optional.required
        with pytest.raises(ValueError):
            optional.check("kdv")

    def test_duplicate(self):
        params = Params()
        params.add(Param("n"))
        with pytest.raises(KeyError):
            params.add(Param("n"))

    def test_bind(self):
        bound = PARAMS.bind({"n": 3, "kappa": "9/5"})
        assert bound == {
            "n": 3,
            "kappa": Fraction(9, 5),
            "model": "nls",
            "dt": 0.1,
            "probes": [0.0],
        }
        assert list(PARAMS) == ["n", "kappa", "model", "dt", "probes"]

    @pytest.mark.parametrize(
        "arguments, key",
        [
            ({"n": 3, "kappa": 1, "foo": 1}, "foo"),
            ({"kappa": 1}, "n"),
            ({"n": 3, "kappa": 1.8}, "kappa"),
            ({"n": 3, "kappa": 1, "model": "kdv"}, "model"),
        ],
    )
    def test_bind_error(self, arguments, key):
        with pytest.raises(ConfigError, match=f"'{key}'"):
            PARAMS.bind(arguments)

    def test_dump(self):
        bound = PARAMS.bind({"n": 3, "kappa": "9/5", "dt": "1e-3"})
        assert PARAMS.dump(bound) == {
            "n": 3,
            "kappa": "9/5",
            "model": "nls",
            "dt": 0.001,
            "probes": [0.0],
        }
