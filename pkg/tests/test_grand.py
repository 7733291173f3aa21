import math

import numpy as np
import pytest
from scipy.integrate import quad

from grandlp import functions as fn
from grandlp import grand as gr


UNIT_IND = fn.indicator(fn.box1d(0, 1))
UNIT_BOX = fn.box1d(0, 1)
PD2 = fn.power_decay_weight(2.0)


def brute_force_grand(f_abs, p, theta, weight_s, m=4096, lo=0.0, hi=np.inf):
    """Independent oracle: dense uniform eps grid x scipy quadrature.

    f_abs: |f| as a plain callable on t >= 0 (even functions assumed);
    the grandizer is (1+t)^(-weight_s) entering with exponent eps/p.
    """
    best = -np.inf
    for eps in np.linspace((p - 1) / m, p - 1, m):
        I, _ = quad(lambda t: f_abs(t) ** (p - eps)
                    * (1 + t) ** (-weight_s * eps / p),
                    lo, hi, epsabs=1e-15, epsrel=1e-12, limit=300)
        if lo == 0.0 and hi == np.inf:
            I *= 2.0
        best = max(best, eps**theta * I ** (1.0 / (p - eps)))
    return best


def test_indicator_closed_form_norm():
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=fn.constant_weight(1.0),
                                domain=UNIT_BOX)
    res = gr.grand_norm(UNIT_IND, params)
    assert res.value == pytest.approx(1.0, abs=1e-10)
    assert res.argmax_eps == pytest.approx(1.0, abs=1e-9)
    assert res.boundary_flag == "eps_max"


def test_indicator_curve_is_the_identity():
    params = gr.GrandNormParams(p=2.0, theta=1.0, m=32, domain=UNIT_BOX)
    for c in gr.epsilon_curve(UNIT_IND, params):
        assert c.phi == pytest.approx(c.eps, abs=1e-10)


def test_theta_zero_reduces_to_lebesgue():
    params = gr.GrandNormParams(p=2.0, theta=0.0, domain=UNIT_BOX)
    res = gr.grand_norm(UNIT_IND, params)
    assert res.value == pytest.approx(1.0, abs=1e-10)


def test_plain_theta_variant_closed_form():
    # phi(eps) = eps^(2/(3-eps)) on (0,2]; dense-grid oracle first
    eps = np.linspace(2.0 / 4096, 2.0, 4096)
    oracle = float(np.max(eps ** (2.0 / (3.0 - eps))))
    params = gr.GrandNormParams(p=3.0, theta=2.0, variant="plain_theta",
                                domain=UNIT_BOX)
    res = gr.grand_norm(UNIT_IND, params)
    assert res.value == pytest.approx(oracle, abs=1e-6)
    assert res.argmax_eps == pytest.approx(2.0, abs=1e-6)


def test_classical_variant_closed_form():
    # phi(eps) = (eps * 1)^(1/(2-eps)) peaks at eps = 1 with value 1
    params = gr.GrandNormParams(p=2.0, theta=1.0, variant="classical",
                                domain=UNIT_BOX)
    res = gr.grand_norm(UNIT_IND, params)
    assert res.value == pytest.approx(1.0, abs=1e-9)


def test_exp_abs_against_dense_oracle():
    oracle = brute_force_grand(lambda t: math.exp(-t), 2.0, 1.0, 2.0)
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=PD2)
    res = gr.grand_norm(fn.exp_abs(), params)
    assert res.value == pytest.approx(oracle, rel=1e-4)


def test_equivalent_variant_against_oracle():
    p, theta = 2.0, 1.0
    best = -np.inf
    for eps in np.linspace(1 / 2048, 1.0, 2048):
        I, _ = quad(lambda t: math.exp(-(p - eps) * t) * (1 + t) ** (-2 * eps),
                    0, np.inf, epsabs=1e-15, epsrel=1e-12)
        best = max(best, eps ** (theta / (p - eps)) * (2 * I) ** (1 / (p - eps)))
    params = gr.GrandNormParams(p=p, theta=theta, weight=PD2, variant="equivalent")
    res = gr.grand_norm(fn.exp_abs(), params)
    assert res.value == pytest.approx(best, rel=1e-4)


def test_sup_dominates_every_sample():
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=PD2, m=64)
    res = gr.grand_norm(fn.gaussian(0.5), params)
    for c in res.curve:
        assert c.phi <= res.value + c.err + res.error_at_max + 1e-12


@pytest.mark.parametrize("lam", [2.0, 5.0])
def test_homogeneity(lam):
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=PD2, m=32,
                                quad_tol=1e-10)
    base = gr.grand_norm(fn.exp_abs(), params)
    scaled = gr.grand_norm(fn.scaled(lam, fn.exp_abs()), params)
    assert scaled.value == pytest.approx(lam * base.value, rel=1e-8)


def test_triangle_inequality():
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=PD2, m=24)
    f, g = fn.exp_abs(), fn.gaussian(0.5)
    nf = gr.grand_norm(f, params)
    ng = gr.grand_norm(g, params)
    nfg = gr.grand_norm(fn.add(f, g), params)
    assert nfg.value <= nf.value + ng.value + 1e-8 * (nf.value + ng.value)


def test_theta_monotonicity_bound():
    p = 2.0
    params1 = gr.GrandNormParams(p=p, theta=1.0, weight=PD2, m=24)
    params2 = gr.GrandNormParams(p=p, theta=2.0, weight=PD2, m=24)
    for f in (fn.exp_abs(), fn.gaussian(0.5)):
        low = gr.grand_norm(f, params1)
        high = gr.grand_norm(f, params2)
        bound = max(1.0, (p - 1.0) ** 1.0) * low.value
        assert high.value <= bound * (1 + 1e-8) + 1e-9


def test_monotone_under_truncation():
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=PD2, m=32,
                                quad_tol=1e-9)
    full = gr.grand_norm(fn.exp_abs(), params)
    prev = 0.0
    for n in (1, 2, 4, 8):
        res = gr.grand_norm(fn.restrict(fn.exp_abs(), fn.box1d(-n, n)), params)
        assert res.value >= prev - 1e-10
        assert res.value <= full.value + 1e-10
        prev = res.value
    assert abs(full.value - prev) < 1e-4


def test_infinite_norm_verdict():
    params = gr.GrandNormParams(p=2.0, theta=1.0, m=8, eps_min_div=8.0)
    res = gr.grand_norm(fn.power_decay(0.4), params)
    assert not res.finite
    assert res.value == math.inf
    assert res.diverged_at is not None


def test_ceiling_triggers_membership_failure():
    params = gr.GrandNormParams(p=2.0, theta=1.0, m=8, eps_min_div=8.0,
                                ceiling=1.0, domain=UNIT_BOX)
    res = gr.grand_norm(fn.scaled(100.0, UNIT_IND), params)
    assert not res.finite


# ---------------------------------------------------------------------------
# vanishing limit


def test_vanishing_limit_indicator_theta1():
    params = gr.GrandNormParams(p=2.0, theta=1.0, domain=UNIT_BOX)
    v = gr.vanishing_limit(UNIT_IND, params)
    assert v.belongs_to_closure
    assert v.verdict == "in_closure"
    # phi = eps exactly, so the sequence is eps_k itself
    for pt in v.sequence:
        assert pt.phi == pytest.approx(pt.eps, abs=1e-12)


def test_vanishing_limit_theta0_fails():
    params = gr.GrandNormParams(p=2.0, theta=0.0, domain=UNIT_BOX)
    v = gr.vanishing_limit(UNIT_IND, params)
    assert not v.belongs_to_closure
    assert v.verdict == "not_in_closure"
    assert v.limit_estimate == pytest.approx(1.0, abs=1e-10)


def test_vanishing_limit_holder_mechanism():
    # f in L^p with an integrable grandizer and theta > 0: the limit is 0 and
    # every sample is dominated by the independent companion bound
    params = gr.GrandNormParams(p=2.0, theta=1.0, weight=PD2)
    for f in (fn.exp_abs(), fn.gaussian(0.5)):
        v = gr.vanishing_limit(f, params)
        assert v.belongs_to_closure, v.verdict
        bound = gr.holder_phi_bound(f, params)
        for pt in v.sequence:
            assert pt.phi <= bound(pt.eps) + pt.err + 1e-9


def test_holder_bound_requires_integrable_weight():
    params = gr.GrandNormParams(p=2.0, theta=1.0,
                                weight=fn.power_growth_weight(1.0))
    with pytest.raises(ValueError):
        gr.holder_phi_bound(fn.exp_abs(), params)


def test_divergent_at_small_eps_is_not_in_closure():
    # |f|^(p-eps) eventually integrable for big eps but divergent near 0
    params = gr.GrandNormParams(p=2.0, theta=1.0)
    v = gr.vanishing_limit(fn.power_decay(0.6), params)
    assert not v.belongs_to_closure


def test_param_validation():
    with pytest.raises(ValueError):
        gr.GrandNormParams(p=1.0)
    with pytest.raises(ValueError):
        gr.GrandNormParams(p=2.0, theta=-1.0)
    with pytest.raises(ValueError):
        gr.GrandNormParams(p=2.0, m=4)
    with pytest.raises(ValueError):
        gr.GrandNormParams(p=2.0, variant="bogus")


def test_result_serializes():
    params = gr.GrandNormParams(p=2.0, theta=1.0, m=16, domain=UNIT_BOX)
    res = gr.grand_norm(UNIT_IND, params)
    d = res.to_dict()
    assert d["value"] == pytest.approx(1.0, abs=1e-10)
    assert len(d["curve"]) == len(res.curve)
