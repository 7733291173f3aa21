import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grandlp import functions as fn


def test_eval_exp_abs_at_zero():
    assert fn.evaluate(fn.exp_abs(), 0.0) == 1.0


def test_eval_indicator_outside_support():
    assert fn.evaluate(fn.indicator(fn.box1d(0, 1)), 2.0) == 0.0


def test_translate_moves_the_peak():
    f = fn.translate(fn.exp_abs(), 3.0)
    assert fn.evaluate(f, 3.0) == 1.0
    assert fn.evaluate(f, 0.0) == pytest.approx(math.exp(-3.0))


def test_restrict_inside_and_outside():
    f = fn.restrict(fn.exp_abs(), fn.box1d(0, 1))
    assert fn.evaluate(f, 0.5) == pytest.approx(math.exp(-0.5))
    assert fn.evaluate(f, -1.0) == 0.0


def test_restrict_to_vanishing_interval():
    E4 = fn.interval_family(4)
    assert E4.lo[0] == pytest.approx(0.8)
    f = fn.restrict(fn.exp_abs(), E4)
    assert fn.evaluate(f, 0.9) == pytest.approx(math.exp(-0.9))
    assert fn.evaluate(f, 0.5) == 0.0


def test_interval_family_is_nested():
    for n in range(1, 12):
        En = fn.interval_family(n)
        Enext = fn.interval_family(n + 1)
        assert 0.0 < En.lo[0] < Enext.lo[0] < 1.0
        assert En.hi[0] == Enext.hi[0] == 1.0


def test_modulate_zero_frequency_is_identity():
    f = fn.gaussian(1.0)
    m = fn.modulate(f, 0.0)
    x = np.linspace(-2, 2, 9)
    assert np.allclose(fn.evaluate(m, x.reshape(-1, 1)),
                       fn.evaluate(f, x.reshape(-1, 1)))


def test_modulate_preserves_magnitude():
    f = fn.gaussian(0.5)
    m = fn.modulate(f, 2.7)
    x = np.linspace(-3, 3, 33)
    assert np.allclose(np.abs(fn.evaluate(m, x.reshape(-1, 1))),
                       fn.evaluate(f, x.reshape(-1, 1)))


def test_modulate_phase_value():
    f = fn.exp_abs()
    m = fn.modulate(f, 1.5)
    x = 0.8
    expect = np.exp(1j * 1.5 * x) * math.exp(-x)
    assert fn.evaluate(m, x) == pytest.approx(expect)


@given(st.floats(-5, 5), st.floats(0.1, 3))
@settings(max_examples=50, deadline=None)
def test_translate_roundtrip(x, shift):
    f = fn.translate(fn.translate(fn.gaussian(1.0), shift), -shift)
    assert fn.evaluate(f, x) == pytest.approx(fn.evaluate(fn.gaussian(1.0), x))


@given(st.floats(-3, 3))
@settings(max_examples=50, deadline=None)
def test_restrict_is_idempotent(x):
    E = fn.box1d(-1.0, 1.5)
    once = fn.restrict(fn.exp_abs(), E)
    twice = fn.restrict(once, E)
    assert fn.evaluate(twice, x) == fn.evaluate(once, x)


def test_sum_and_scale_evaluate_pointwise():
    f = fn.add(fn.scaled(2.0, fn.gaussian(1.0)), fn.exp_abs())
    x = 0.7
    assert fn.evaluate(f, x) == pytest.approx(
        2.0 * math.exp(-x * x) + math.exp(-x))


def test_dimension_mismatch_raises():
    with pytest.raises(fn.DimensionMismatchError):
        fn.restrict(fn.exp_abs(dim=2), fn.box1d(0, 1))
    with pytest.raises(fn.DimensionMismatchError):
        fn.add(fn.exp_abs(), fn.exp_abs(dim=2))


def test_non_finite_point_is_an_evaluation_error():
    with pytest.raises(fn.EvaluationError):
        fn.evaluate(fn.exp_abs(), math.nan)


# ---------------------------------------------------------------------------
# weights


@pytest.mark.parametrize("w", [
    fn.constant_weight(1.0),
    fn.constant_weight(2.0),
    fn.power_growth_weight(1.0),
    fn.power_growth_weight(2.0),
    fn.exp_growth_weight(0.5),
    fn.power_decay_weight(2.0),
    fn.gaussian_weight(1.0),
])
def test_beurling_flags_agree_with_sampling(w):
    check = fn.check_submultiplicative(w, sample_count=10_000, seed=7)
    assert check.passed, check.detail


def test_power_decay_fails_beurling_minimum():
    check = fn.check_submultiplicative(fn.power_decay_weight(2.0), 5000, seed=1)
    assert check.detail["min_weight"] < 1.0
    assert not check.detail["beurling_observed"]


def test_constant_one_ratio_is_exactly_one():
    check = fn.check_submultiplicative(fn.constant_weight(1.0), 1000, seed=3)
    assert check.detail["max_ratio"] == pytest.approx(1.0)


def test_grandizer_integrable_closed_forms():
    res = fn.grandizer_integrable(fn.power_decay_weight(2.0))
    assert res.integrable and res.value == pytest.approx(2.0)
    res = fn.grandizer_integrable(fn.constant_weight(1.0))
    assert not res.integrable and res.status == "divergent"
    res = fn.grandizer_integrable(fn.gaussian_weight(0.5))
    assert res.integrable and res.value == pytest.approx(math.sqrt(math.pi / 0.5))


def test_grandizer_integrable_checked_by_quadrature():
    # the closed form is one route; adaptive quadrature is the other
    from grandlp.quadrature import integrate_box_raw

    w = fn.power_decay_weight(2.0)
    val, err = integrate_box_raw(
        lambda p: fn.eval_weight(w, p), fn.Box((-8000.0,), (8000.0,)), 1e-10)
    assert val == pytest.approx(2.0, abs=1e-3)


def test_weight_positivity():
    # within the range where float64 does not underflow to zero
    x = np.linspace(-12, 12, 101).reshape(-1, 1)
    for w in (fn.power_decay_weight(3.0), fn.exp_growth_weight(1.0),
              fn.gaussian_weight(2.0)):
        assert np.all(fn.eval_weight(w, x) > 0)


# ---------------------------------------------------------------------------
# JSON round trips


@pytest.mark.parametrize("spec", [
    fn.exp_abs(),
    fn.gaussian(0.5),
    fn.indicator(fn.box1d(0, 1)),
    fn.power_decay(3.0),
    fn.lorentzian(1.0),
    fn.poly_gaussian([1.0, 0.0, 2.0], 1.0),
    fn.restrict(fn.exp_abs(), fn.interval_family(3)),
    fn.translate(fn.gaussian(1.0), 2.0),
    fn.modulate(fn.exp_abs(), 1.5),
    fn.scaled(2.5, fn.gaussian(1.0)),
    fn.add(fn.exp_abs(), fn.scaled(3.0, fn.gaussian(2.0))),
    fn.sampled(np.linspace(-1, 1, 5), [0.0, 1.0, 2.0, 1.0, 0.0]),
])
def test_spec_json_roundtrip(spec):
    back = fn.spec_from_json(fn.spec_to_json(spec))
    x = np.linspace(-2.5, 2.5, 17)
    assert np.allclose(fn.evaluate(back, x.reshape(-1, 1)),
                       fn.evaluate(spec, x.reshape(-1, 1)))


@pytest.mark.parametrize("w", [
    fn.constant_weight(2.0),
    fn.power_growth_weight(1.5),
    fn.power_decay_weight(2.0),
    fn.exp_growth_weight(0.3),
    fn.gaussian_weight(1.0),
])
def test_weight_json_roundtrip(w):
    back = fn.weight_from_json(fn.weight_to_json(w))
    assert back == w


def test_missing_field_names_the_field():
    with pytest.raises(ValueError, match="missing field 'q'"):
        fn.spec_from_json({"kind": "gaussian"})


def test_describe_formulas():
    assert fn.describe(fn.exp_abs()) == "exp(-|t|)"
    assert "1/(1+g^2)" in fn.describe(fn.scaled(2.0, fn.lorentzian(1.0)), "g")


def test_support_box_intersection():
    f = fn.restrict(fn.indicator(fn.box1d(0, 2)), fn.box1d(1, 3))
    sup = fn.support_box(f)
    assert sup.lo[0] == 1.0 and sup.hi[0] == 2.0
