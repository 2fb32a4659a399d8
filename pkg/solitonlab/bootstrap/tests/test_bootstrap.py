#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import solitonlab.bootstrap.trace as TRACE
from solitonlab.bootstrap import (
    BootstrapState,
    BootstrapStep,
    Status,
    gain_lower_bound,
    gain_step_bound,
    initial_exponent,
    run,
    save_trace_csv,
    step,
    step_bound,
)
from solitonlab.exception import BootstrapError, KappaError
from solitonlab.utility import read_csv


def _admissible(n):
    if n == 2:
        return st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50)
    critical = Fraction(2, n - 2)
    return st.fractions(
        min_value=Fraction(1, 50), max_value=critical * Fraction(9, 10), max_denominator=50
    )


_SWEEP = st.integers(min_value=2, max_value=10).flatmap(
    lambda n: st.tuples(st.just(n), _admissible(n))
)


class TestInitialExponent:
    def test_three_dimensions(self):
        assert initial_exponent(3, Fraction(1, 2)) == 6

    def test_two_dimensions(self):
        assert initial_exponent(2, 1) == 6

    def test_one_dimension(self):
        assert initial_exponent(1, 5) == math.inf

    def test_invalid(self):
        with pytest.raises(KappaError):
            initial_exponent(3, 0)
        with pytest.raises(TypeError):
            initial_exponent(3, 0.5)


class TestStep:
    def test_done(self):
        record = step(BootstrapState(3, Fraction(1, 2), 6))
        assert record.p == "3"
        assert record.outcome is Status.DONE
        assert record.next_exponent == math.inf

    def test_two_steps(self):
        first = step(BootstrapState(3, "9/5", 6))
        assert first.p == "30/23"
        assert first.outcome is Status.ADVANCED
        assert first.next_exponent == 10

        second = step(BootstrapState(3, "9/5", first.next_exponent), 2)
        assert second.p == "50/23"
        assert second.outcome is Status.DONE

    def test_critical_stall(self):
        record = step(BootstrapState(4, 1, 4))
        assert record.p == "4/3"
        assert record.next_exponent == 4
        assert record.outcome is Status.STALLED

    def test_equality_is_done(self):
        # 1/P = (1 + 2κ)/q = 2/3 exactly
        record = step(BootstrapState(3, Fraction(3, 2), 6))
        assert record.outcome is Status.DONE

    def test_diverged(self):
        record = step(BootstrapState(3, 10, 2))
        assert record.outcome is Status.DIVERGED

    @pytest.mark.parametrize("n", [3, 4, 5, 10])
    def test_critical_fixed_point(self, n):
        kappa = Fraction(2, n - 2)
        q0 = initial_exponent(n, kappa)
        assert step(BootstrapState(n, kappa, q0)).outcome is Status.STALLED

    def test_invalid_state(self):
        with pytest.raises(ValueError):
            step(BootstrapState(3, 1, math.inf))
        with pytest.raises(ValueError):
            step(BootstrapState(1, 1, 4))
        with pytest.raises(ValueError):
            BootstrapState(3, 1, Fraction(3, 2))

    def test_pyobj(self):
        record = step(BootstrapState(3, "9/5", 6))
        contents = record.to_pyobj()
        assert contents == {
            "index": 1,
            "q": "6",
            "p": "30/23",
            "q_next": "10",
            "status": "ADVANCED",
        }
        assert BootstrapStep.from_pyobj(contents).next_exponent == 10


class TestGainLowerBound:
    def test_three_dimensions(self):
        assert gain_lower_bound(3, Fraction(9, 5)) == Fraction(1, 15)

    def test_critical(self):
        assert gain_lower_bound(4, 1) == 0

    def test_inadmissible(self):
        with pytest.raises(KappaError):
            gain_lower_bound(4, 2)

    def test_dimension_one(self):
        with pytest.raises(ValueError):
            gain_lower_bound(1, 1)

    @settings(max_examples=50, derandomize=True)
    @given(st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=1000))
    def test_two_dimensions(self, kappa):
        assert gain_lower_bound(2, kappa) >= Fraction(1, 2)


class TestRun:
    def test_two_steps(self):
        trace = run(3, "9/5")
        assert trace.states == [6, 10]
        assert trace.status is Status.DONE
        assert trace.gain_bound == Fraction(1, 15)

    def test_critical(self):
        trace = run(4, 1)
        assert trace.states == [4]
        assert len(trace.steps) == 1
        assert trace.status is Status.STALLED

    def test_two_dimensions(self):
        trace = run(2, 3)
        assert trace.states == [14]
        assert trace.steps[0].p == "2"
        assert trace.status is Status.DONE

    def test_one_dimension(self):
        trace = run(1, 1)
        assert trace.states == []
        assert trace.status is Status.DONE

    def test_inadmissible(self):
        trace = run(3, 3, max_iter=8)
        assert trace.status in (Status.DIVERGED, Status.MAX_ITER)
        assert trace.gain_bound is None

    def test_max_iter(self):
        with pytest.raises(ValueError):
            run(3, 1, max_iter=0)

    @settings(max_examples=100, derandomize=True, deadline=None)
    @given(_SWEEP)
    def test_admissible_sweep(self, case):
        n, kappa = case
        trace = run(n, kappa, max_iter=10000)
        gain = gain_lower_bound(n, kappa)
        assert trace.status is Status.DONE
        assert len(trace.states) <= step_bound(n, kappa)
        if n >= 3:
            assert len(trace.steps) <= gain_step_bound(n, kappa)
        for before, after in zip(trace.states, trace.states[1:]):
            assert after > before
            assert 1 / before - 1 / after >= gain

    @pytest.mark.parametrize("bound", ["step_bound", "gain_step_bound"])
    def test_bound_exceeded(self, monkeypatch, bound):
        monkeypatch.setattr(TRACE, bound, lambda n, kappa: 1)
        with pytest.raises(BootstrapError, match="exceed"):
            run(3, "9/5")

    def test_to_pyobj(self):
        contents = run(3, "9/5").to_pyobj()
        assert contents["states"] == ["6", "10"]
        assert contents["status"] == "DONE"
        assert contents["gain_bound"] == "1/15"
        assert contents["steps"][-1]["q_next"] == "inf"

    def test_save_csv(self, tmp_path):
        save_trace_csv(run(3, "9/5"), tmp_path / "trace.csv")
        columns = read_csv(tmp_path / "trace.csv")
        assert list(columns) == ["step", "q", "P", "Q"]
        assert [str(value) for value in columns["P"]] == ["30/23", "50/23"]
        assert list(columns["Q"].astype(float)) == [10.0, math.inf]
