"""Synthetic series generation."""

import numpy as np
import pytest

from ordinalwalk import (
    GeneratorSpec,
    OrdinalPattern,
    SpecError,
    StepModel,
    empirical_distribution,
    generate,
)


def test_same_spec_same_output():
    spec = GeneratorSpec("iid_uniform", 500, seed=13)
    a, b = generate(spec), generate(spec)
    assert np.array_equal(a.values, b.values)


def test_seeds_differ():
    a = generate(GeneratorSpec("iid_uniform", 500, seed=1))
    b = generate(GeneratorSpec("iid_uniform", 500, seed=2))
    assert not np.array_equal(a.values, b.values)


def test_walk_starts_at_zero_with_cumulative_steps():
    spec = GeneratorSpec("walk", 100, seed=3, step=StepModel.uniform(0.7))
    series = generate(spec).values
    assert series[0] == 0.0
    steps = np.diff(series)
    assert steps.size == 99
    assert np.all(steps > 0.7 - 1.0) and np.all(steps < 0.7)
    # P(step > 0) = b: a 3-sigma binomial check at b = 0.7
    spec_big = GeneratorSpec("walk", 10001, seed=3, step=StepModel.uniform(0.7))
    frac = float(np.mean(np.diff(generate(spec_big).values) > 0))
    assert abs(frac - 0.7) < 3 * np.sqrt(0.7 * 0.3 / 10000)


def test_walk_requires_step_model():
    with pytest.raises(SpecError):
        GeneratorSpec("walk", 100)


def test_logistic_stays_in_unit_interval_and_forbids_descents():
    series = generate(GeneratorSpec("logistic", 2000, x0=0.3))
    assert np.all(series.values >= 0.0) and np.all(series.values <= 1.0)
    dist = empirical_distribution(series, 3)
    assert dist.weight_of(OrdinalPattern.from_string("321")) == 0.0


def test_logistic_x0_validated():
    with pytest.raises(SpecError):
        GeneratorSpec("logistic", 100, x0=0.0)
    with pytest.raises(SpecError):
        GeneratorSpec("logistic", 100, x0=1.5)


def test_sine_shape():
    series = generate(GeneratorSpec("sine", 40, period=20.0, amplitude=2.0))
    assert series.values.min() == pytest.approx(-2.0, abs=1e-6)
    assert series.values.max() == pytest.approx(2.0, abs=1e-6)
    # period 20: sample 20 apart repeats
    assert series.values[25] == pytest.approx(series.values[5], abs=1e-12)


def test_sine_needs_positive_period():
    with pytest.raises(SpecError):
        GeneratorSpec("sine", 10, period=0.0)


def test_mod10_exact_orbit():
    series = generate(GeneratorSpec("mod10", 6, x0="1/7"))
    sevenths = np.array([1, 3, 2, 6, 4, 5]) / 7.0
    np.testing.assert_allclose(series.values, sevenths, rtol=0, atol=1e-15)


def test_mod10_detects_periodic_orbit():
    # 1/7 has period 6 under the decimal shift
    with pytest.raises(SpecError, match="periodic"):
        generate(GeneratorSpec("mod10", 7, x0="1/7"))


def test_mod10_float_x0_dies_quickly():
    # binary floats have power-of-two denominators, which collapse to the
    # fixed point 0; the error names the problem instead of emitting junk
    with pytest.raises(SpecError, match="periodic"):
        generate(GeneratorSpec("mod10", 100, x0=0.4))


def test_mod10_long_orbit_runs():
    series = generate(GeneratorSpec("mod10", 1000, x0="1/2003"))
    assert series.values.size == 1000
    assert np.all(series.values >= 0.0) and np.all(series.values < 1.0)


def test_unknown_kind():
    with pytest.raises(SpecError):
        GeneratorSpec("brownian", 100)


def test_length_validated():
    with pytest.raises(SpecError):
        GeneratorSpec("iid_uniform", 0)
