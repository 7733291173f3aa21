import math

import numpy as np
import pytest
from scipy.integrate import quad

from grandlp import functions as fn
from grandlp import fourier as ft


GBOX = fn.box1d(-10.0, 10.0)


def direct_transform_oracle(f, gamma):
    """Independent route: scipy quadrature of the defining integral."""
    re, _ = quad(lambda t: float(np.real(fn.evaluate(f, np.array([[t]]))[0]))
                 * math.cos(gamma * t), -np.inf, np.inf,
                 epsabs=1e-12, epsrel=1e-10, limit=400)
    im, _ = quad(lambda t: -float(np.real(fn.evaluate(f, np.array([[t]]))[0]))
                 * math.sin(gamma * t), -np.inf, np.inf,
                 epsabs=1e-12, epsrel=1e-10, limit=400)
    return re + 1j * im


@pytest.mark.parametrize("f", [fn.exp_abs(), fn.gaussian(0.5),
                               fn.indicator(fn.box1d(-1, 1))])
@pytest.mark.parametrize("gamma", [0.0, 1.0, 3.7])
def test_analytic_catalog_against_direct_quadrature(f, gamma):
    tr = ft.fourier_analytic(f)
    assert tr is not None
    got = fn.evaluate(tr.spec, gamma)
    assert got == pytest.approx(direct_transform_oracle(f, gamma), abs=1e-9)


def test_exp_abs_closed_form():
    tr = ft.fourier_analytic(fn.exp_abs())
    g = np.linspace(-10, 10, 41)
    exact = 2.0 / (1.0 + g**2)
    got = np.asarray(fn.evaluate(tr.spec, g.reshape(-1, 1)))
    assert np.max(np.abs(got - exact)) < 1e-14


def test_gaussian_closed_form():
    tr = ft.fourier_analytic(fn.gaussian(0.5))
    g = np.linspace(-8, 8, 33)
    exact = math.sqrt(2 * math.pi) * np.exp(-g**2 / 2)
    got = np.asarray(fn.evaluate(tr.spec, g.reshape(-1, 1)))
    assert np.max(np.abs(got - exact)) < 1e-14


def test_indicator_transform_value_at_zero_is_the_measure():
    tr = ft.fourier_analytic(fn.indicator(fn.box1d(-1, 1)))
    assert fn.evaluate(tr.spec, 0.0) == pytest.approx(2.0)
    assert fn.evaluate(tr.spec, 1.0) == pytest.approx(2.0 * math.sin(1.0))


def test_unsupported_is_a_value():
    assert ft.fourier_analytic(fn.power_decay(3.0)) is None
    assert ft.fourier_analytic(fn.sampled([0, 1], [1.0, 1.0])) is None


def test_numeric_accuracy_exp_abs():
    err = ft.transform_sup_error(fn.exp_abs(), 40.0, 2**14, GBOX)
    assert err < 1e-3


def test_numeric_accuracy_gaussian():
    err = ft.transform_sup_error(fn.gaussian(0.5), 40.0, 2**14, GBOX)
    assert err < 1e-8


def test_zero_frequency_is_total_mass():
    tr = ft.fourier_numeric(fn.exp_abs(), 40.0, 2**12)
    i0 = int(np.argmin(np.abs(tr.gamma)))
    assert tr.values[i0].real == pytest.approx(2.0, abs=tr.err_estimate + 1e-9)


def test_shift_rule():
    y0 = 1.3
    tr = ft.fourier_numeric(fn.translate(fn.gaussian(0.5), y0), 40.0, 2**13)
    mask = np.abs(tr.gamma) <= 10
    base = math.sqrt(2 * math.pi) * np.exp(-tr.gamma[mask] ** 2 / 2)
    expect = np.exp(-1j * tr.gamma[mask] * y0) * base
    assert np.max(np.abs(tr.values[mask] - expect)) < 1e-8


def test_modulation_rule():
    xi = 2.0
    tr = ft.fourier_numeric(fn.modulate(fn.gaussian(0.5), xi), 40.0, 2**13)
    mask = np.abs(tr.gamma) <= 10
    expect = math.sqrt(2 * math.pi) * np.exp(-(tr.gamma[mask] - xi) ** 2 / 2)
    assert np.max(np.abs(tr.values[mask] - expect)) < 1e-8


def test_analytic_shift_modulation_consistency():
    # unwinding the wrappers analytically must agree with direct evaluation
    f = fn.translate(fn.modulate(fn.gaussian(1.0), 1.2), -0.4)
    tr = ft.fourier_analytic(f)
    num = ft.fourier_numeric(f, 30.0, 2**13)
    mask = np.abs(num.gamma) <= 8
    exact = np.asarray(fn.evaluate(tr.spec, num.gamma[mask].reshape(-1, 1)))
    assert np.max(np.abs(exact - num.values[mask])) < 1e-8


def test_linearity():
    f, g = fn.exp_abs(), fn.gaussian(0.5)
    tr_sum = ft.fourier_numeric(fn.add(f, g), 40.0, 2**12)
    tr_f = ft.fourier_numeric(f, 40.0, 2**12)
    tr_g = ft.fourier_numeric(g, 40.0, 2**12)
    assert np.max(np.abs(tr_sum.values - tr_f.values - tr_g.values)) < 1e-12


def test_boundedness_by_l1_mass():
    for f, mass in ((fn.exp_abs(), 2.0), (fn.gaussian(1.0), math.sqrt(math.pi))):
        tr = ft.fourier_numeric(f, 40.0, 2**12)
        assert np.max(np.abs(tr.values)) <= mass + tr.err_estimate + 1e-9


def test_convergence_under_doubling():
    e1 = ft.transform_sup_error(fn.exp_abs(), 20.0, 2**10, GBOX)
    e2 = ft.transform_sup_error(fn.exp_abs(), 40.0, 2**12, GBOX)
    e3 = ft.transform_sup_error(fn.exp_abs(), 80.0, 2**14, GBOX)
    assert e1 > e2 > e3


def test_indicator_error_is_reported_not_hidden():
    tr = ft.fourier_numeric(fn.indicator(fn.box1d(0, 1)), 40.0, 2**12)
    assert tr.aliasing_warning
    assert tr.err_estimate > 1e-4  # slow 1/gamma decay shows up in the estimate


def test_n_validation():
    with pytest.raises(ValueError):
        ft.fourier_numeric(fn.gaussian(1.0), 10.0, 63)
    with pytest.raises(ValueError):
        ft.fourier_numeric(fn.gaussian(1.0), 10.0, 100)


def test_refusal_without_certificate():
    from grandlp.quadrature import CertificateError

    f2 = fn.box_transform(fn.Box((-1.0, -1.0), (1.0, 1.0)))
    with pytest.raises(CertificateError):
        ft.fourier_numeric(f2, 10.0, 64)


def test_dim2_gaussian_transform():
    f = fn.gaussian(1.0, dim=2)
    tr = ft.fourier_numeric(f, 10.0, 2**7)
    pts = tr.gamma.reshape(-1, 2)
    mask = np.linalg.norm(pts, axis=1) <= 5.0
    exact = math.pi * np.exp(-np.sum(pts[mask] ** 2, axis=1) / 4.0)
    got = tr.values.reshape(-1)[mask]
    assert np.max(np.abs(got - exact)) < 1e-6


def test_transform_result_callable_interpolates():
    # linear interpolation between dual-grid points: error ~ (dgamma)^2
    tr = ft.fourier_numeric(fn.gaussian(0.5), 40.0, 2**12)
    val = tr(0.5)
    assert abs(val - math.sqrt(2 * math.pi) * math.exp(-0.125)) < 5e-3
    on_grid = tr.gamma[np.argmin(np.abs(tr.gamma - 0.5))]
    assert abs(tr(on_grid)
               - math.sqrt(2 * math.pi) * math.exp(-on_grid**2 / 2)) < 1e-8
