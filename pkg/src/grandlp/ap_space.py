"""The paired time/frequency space: grand norm of f plus grand norm of its
transform, convolution, and the associated inequality reports.

The pair norm is

    ||f||_pair = ||f||_{grand(p, theta1, a)} + ||F f||_{grand(q, theta2, b)}

with the frequency side routed through one of three strategies:

* direct     the analytic transform is a fast-decaying catalog spec and
             is integrated like any other function;
* grid       the analytic transform contains an oscillatory sinc-type
             factor (indicator transforms): it is evaluated exactly on
             the FFT dual grid and integrated as sampled data with a
             certified tail bound -- slow 1/g decay makes the reported
             error honest rather than small;
* numeric    no closed form: the FFT approximation is used, its
             truncation+discretization estimate is propagated into the
             frequency-norm error by recomputing with perturbed samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .functions import (
    Box,
    FunctionSpec,
    WeightSpec,
    evaluate,
    gaussian,
    sampled,
    scaled,
    support_box,
)
from .quadrature import (
    AccuracyError,
    CertificateError,
    DecayCert,
    DivergenceError,
    IntegralTask,
    decay_certificate,
    integrate,
    integrate_box_raw,
    integrate_weight_power,
    tail_bound,
    transform_certificate,
    weighted_lp_norm_with_error,
    weight_atom,
    _sup_on_box,
)
from .grand import (
    CurvePoint,
    GrandNormParams,
    GrandNormResult,
    grand_norm,
    _hybrid_grid,
)
from .fourier import TransformResult, dual_grid, fourier_analytic, fourier_numeric
from .reports import Check, Tolerances, VerificationReport

__all__ = [
    "APNormParams",
    "APNormResult",
    "MembershipError",
    "ap_params",
    "ap_norm",
    "ConvolveResult",
    "convolve",
    "module_inequality_report",
    "fourier_side_inequality_report",
    "local_l1_bound_report",
    "theorem6_inclusion_report",
    "transform_norms",
]


class MembershipError(ValueError):
    """The function is not in the space; .side says which norm is infinite."""

    def __init__(self, side: str, message: str):
        super().__init__(message)
        self.side = side


@dataclass(frozen=True)
class APNormParams:
    time: GrandNormParams
    freq: GrandNormParams
    fft_r: float = 40.0
    fft_n: int = 2**14

    def __post_init__(self):
        if self.time.domain is not None or self.freq.domain is not None:
            raise ValueError("pair norms are defined over the whole space")


def ap_params(p: float, q: float, theta1: float, theta2: float,
              a: WeightSpec | None = None, b: WeightSpec | None = None,
              m: int = 256, refine_passes: int = 3, quad_tol: float = 1e-8,
              fft_r: float = 40.0, fft_n: int = 2**14) -> APNormParams:
    return APNormParams(
        time=GrandNormParams(p=p, theta=theta1, weight=a, m=m,
                             refine_passes=refine_passes, quad_tol=quad_tol),
        freq=GrandNormParams(p=q, theta=theta2, weight=b, m=m,
                             refine_passes=refine_passes, quad_tol=quad_tol),
        fft_r=fft_r, fft_n=fft_n,
    )


# ---------------------------------------------------------------------------
# frequency-side routing


def _contains_box_transform(spec: FunctionSpec) -> bool:
    if spec.kind == "box_transform":
        return True
    for child in (spec.f, spec.g):
        if child is not None and _contains_box_transform(child):
            return True
    return False


def _flatten_atoms(cert: DecayCert | None):
    if cert is None:
        return None
    atoms = []
    for c in cert.components:
        if c.support_radius is not None:
            continue  # transforms are never compactly supported
        for a in c.atoms:
            atoms.append((a.C, a.alpha, a.beta, a.spow, a.valid_from))
    return tuple(atoms) if atoms else None


@dataclass
class TransformNorms:
    """Frequency-side norm evaluator for the transform of one function."""

    source: FunctionSpec
    strategy: str                 # "direct" | "grid" | "numeric"
    spec: FunctionSpec            # analytic spec, or sampled magnitudes
    spec_hi: FunctionSpec | None  # sampled magnitudes + transform error, if any
    transform_error: float
    numeric: TransformResult | None = None

    def grand(self, params: GrandNormParams) -> GrandNormResult:
        res = grand_norm(self.spec, params)
        if self.spec_hi is not None and res.finite:
            hi = grand_norm(self.spec_hi, params)
            if hi.finite:
                spread = max(hi.value - res.value, 0.0)
                res.error_at_max += spread
                res.accuracy_ok = res.accuracy_ok and hi.accuracy_ok
            else:
                res.accuracy_ok = False
        return res

    def lp(self, p_eff: float, w: WeightSpec | None, sigma: float,
           tol: float = 1e-8):
        """(norm, err) of the transform in the weighted L^p_eff norm."""
        val, err = _lp_of(self.spec, p_eff, w, sigma, tol)
        if self.spec_hi is not None:
            hi, hierr = _lp_of(self.spec_hi, p_eff, w, sigma, tol)
            err += max(hi - val, 0.0) + hierr
        return val, err

    def sup_abs(self) -> float:
        if self.strategy == "direct":
            grid = np.linspace(-50.0, 50.0, 20001).reshape(-1, 1)
            return float(np.max(np.abs(evaluate(self.spec, grid)))) + self.transform_error
        return float(np.max(np.asarray(self.spec.values))) + self.transform_error


def _lp_of(spec: FunctionSpec, p_eff: float, w: WeightSpec | None, sigma: float,
           tol: float):
    task = IntegralTask(spec, p_eff, w, sigma, None, tol)
    try:
        res = integrate(task)
        I, ierr = res.value, res.total_error
    except AccuracyError as exc:
        I, ierr = exc.estimate, exc.error_bound + exc.tail_bound
    value = I ** (1.0 / p_eff)
    hi = (I + ierr) ** (1.0 / p_eff)
    return value, hi - value


def transform_norms(f: FunctionSpec, fft_r: float = 40.0,
                    fft_n: int = 2**14) -> TransformNorms:
    """Resolve the frequency-side strategy for f and build the evaluator."""
    analytic = fourier_analytic(f)
    if analytic is not None and not _contains_box_transform(analytic.spec):
        return TransformNorms(f, "direct", analytic.spec, None, 0.0)
    if analytic is not None and f.dim == 1:
        gam = dual_grid(fft_r, fft_n)
        mags = np.abs(np.asarray(evaluate(analytic.spec, gam.reshape(-1, 1))))
        atoms = _flatten_atoms(decay_certificate(analytic.spec))
        spec = sampled(gam, mags, tail=atoms)
        return TransformNorms(f, "grid", spec, None, 0.0)
    if f.dim != 1:
        raise CertificateError("numeric frequency norms are implemented in dim 1")
    tcert = transform_certificate(f)
    if tcert is None:
        raise CertificateError(
            f"no transform decay certificate for kind {f.kind!r}; "
            "frequency norms would have an unbounded tail"
        )
    tr = fourier_numeric(f, fft_r, fft_n)
    mags = np.abs(tr.values)
    atoms = _flatten_atoms(tcert)
    spec = sampled(tr.gamma, mags, tail=atoms)
    spec_hi = sampled(tr.gamma, mags + tr.err_estimate, tail=atoms)
    return TransformNorms(f, "numeric", spec, spec_hi, tr.err_estimate, tr)


# ---------------------------------------------------------------------------
# the pair norm


@dataclass
class APNormResult:
    value: float
    time_part: float
    freq_part: float
    time_result: GrandNormResult
    freq_result: GrandNormResult
    transform_kind: str
    transform_error: float

    @property
    def error_bound(self) -> float:
        return self.time_result.error_at_max + self.freq_result.error_at_max

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "value": self.value,
            "time_part": self.time_part,
            "freq_part": self.freq_part,
            "error_bound": self.error_bound,
            "transform_kind": self.transform_kind,
            "transform_error": self.transform_error,
            "time": self.time_result.to_dict(),
            "frequency": self.freq_result.to_dict(),
        }


def ap_norm(f: FunctionSpec, params: APNormParams) -> APNormResult:
    """Sum of the time-side and frequency-side grand norms.

    Raises MembershipError when either side is infinite, identifying the
    side; transform failures (missing certificates) propagate as
    CertificateError.
    """
    time_res = grand_norm(f, params.time)
    if not time_res.finite:
        raise MembershipError("time", "time-side grand norm is infinite")
    tn = transform_norms(f, params.fft_r, params.fft_n)
    freq_res = tn.grand(params.freq)
    if not freq_res.finite:
        raise MembershipError("frequency", "frequency-side grand norm is infinite")
    return APNormResult(
        value=time_res.value + freq_res.value,
        time_part=time_res.value,
        freq_part=freq_res.value,
        time_result=time_res,
        freq_result=freq_res,
        transform_kind=tn.strategy,
        transform_error=tn.transform_error,
    )


# ---------------------------------------------------------------------------
# convolution


@dataclass
class ConvolveResult:
    spec: FunctionSpec
    err_estimate: float
    R: float
    N: int
    analytic: bool = False


def _as_scaled_gaussian(f: FunctionSpec):
    if f.kind == "gaussian":
        return 1.0, f.q
    if f.kind == "scaled" and f.scale.imag == 0.0 and f.f.kind == "gaussian":
        return f.scale.real, f.f.q
    return None


def convolve(f: FunctionSpec, g: FunctionSpec, R: float = 40.0,
             N: int = 2**12) -> ConvolveResult:
    """Convolution via the transform route: multiply spectra, invert.

    Implemented as the zero-padded FFT product of the samples on a
    common grid, which equals the trapezoid discretization of the
    convolution integral, on the output grid spanning [-2R, 2R].
    Gaussian pairs take the exact closed-form shortcut.  The result
    carries tail atoms built from the factor envelopes via

        |f*g|(x) <= ||f||_1 env_g(|x|/2) + ||g||_1 env_f(|x|/2).
    """
    if f.dim != g.dim:
        raise ValueError("convolution factors must share dimension")
    if f.dim != 1:
        raise ValueError("sampled convolution implemented in dim 1")
    pair = _as_scaled_gaussian(f), _as_scaled_gaussian(g)
    if pair[0] is not None and pair[1] is not None:
        (c1, q1), (c2, q2) = pair
        amp = c1 * c2 * math.sqrt(math.pi / (q1 + q2))
        spec = scaled(amp, gaussian(q1 * q2 / (q1 + q2)))
        return ConvolveResult(spec, 0.0, R, N, analytic=True)

    from .functions import is_complex_valued

    if is_complex_valued(f) or is_complex_valued(g):
        raise ValueError("sampled convolution expects real-valued factors")
    cf = decay_certificate(f)
    cg = decay_certificate(g)
    if cf is None or cg is None:
        raise CertificateError("convolution factors need decay certificates")
    l1_f = integrate(IntegralTask(f, 1.0, tol=1e-8)).value
    l1_g = integrate(IntegralTask(g, 1.0, tol=1e-8)).value

    gridc = _conv_samples(f, g, R, N)
    gridh = _conv_samples(f, g, R, N // 2)
    # half-resolution output points are every other point of the full grid
    disc = float(np.max(np.abs(gridc[1][::2][: gridh[1].size] - gridh[1])))
    box = Box((-R,), (R,))
    sup_f = _sup_on_box(f, box)
    sup_g = _sup_on_box(g, box)
    trunc = (tail_bound(cf, 1.0, None, 0.0, R, 1) * sup_g
             + tail_bound(cg, 1.0, None, 0.0, R, 1) * sup_f)

    atoms = _conv_tail_atoms(cf, cg, l1_f, l1_g)
    spec = sampled(gridc[0], gridc[1], tail=atoms)
    return ConvolveResult(spec, disc + trunc, R, N)


def _cell_averaged(spec: FunctionSpec, x: np.ndarray, dx: float) -> np.ndarray:
    """Samples for the convolution grid: indicator-type factors are
    replaced by their cell-average (overlap fraction), removing the O(dx)
    mass bias that point sampling of a jump would introduce."""
    k = spec.kind
    if k == "indicator" and spec.dim == 1:
        lo, hi = spec.box.lo[0], spec.box.hi[0]
        frac = (np.minimum(x + dx / 2, hi) - np.maximum(x - dx / 2, lo)) / dx
        return np.clip(frac, 0.0, 1.0)
    if k == "restrict" and spec.dim == 1:
        lo, hi = spec.box.lo[0], spec.box.hi[0]
        frac = np.clip((np.minimum(x + dx / 2, hi) - np.maximum(x - dx / 2, lo)) / dx,
                       0.0, 1.0)
        return _cell_averaged(spec.f, x, dx) * frac
    if k == "scaled" and spec.scale.imag == 0.0:
        return spec.scale.real * _cell_averaged(spec.f, x, dx)
    if k == "translate":
        return _cell_averaged(spec.f, x - spec.shift[0], dx)
    if k == "sum":
        return _cell_averaged(spec.f, x, dx) + _cell_averaged(spec.g, x, dx)
    return np.asarray(evaluate(spec, x.reshape(-1, 1)), dtype=float)


def _conv_samples(f: FunctionSpec, g: FunctionSpec, R: float, N: int):
    dx = 2.0 * R / N
    x = -R + dx * np.arange(N)
    fs = _cell_averaged(f, x, dx)
    gs = _cell_averaged(g, x, dx)
    spec_prod = np.fft.fft(fs, 2 * N) * np.fft.fft(gs, 2 * N)
    conv = np.fft.ifft(spec_prod)[: 2 * N - 1].real * dx
    out_x = -2.0 * R + dx * np.arange(2 * N - 1)
    return out_x, conv


def _conv_tail_atoms(cf: DecayCert, cg: DecayCert, l1_f: float, l1_g: float):
    """Half-argument envelopes: each atom of env_g becomes an atom of
    ||f||_1 env_g(|x|/2) and vice versa; compactly supported components
    contribute nothing once |x| exceeds twice their radius, which is
    folded into the valid_from of every atom."""
    min_valid = 1.0
    for cert in (cf, cg):
        for comp in cert.components:
            if comp.support_radius is not None:
                min_valid = max(min_valid, 2.0 * comp.support_radius)
    atoms = []
    for cert, other_l1 in ((cg, l1_f), (cf, l1_g)):
        for comp in cert.components:
            if comp.support_radius is not None:
                continue
            for a in comp.atoms:
                C = other_l1 * a.C * 2.0 ** max(-a.spow, 0.0)
                atoms.append((C, a.alpha / 2.0, a.beta / 4.0, a.spow,
                              max(2.0 * a.valid_from, min_valid)))
    return tuple(atoms) if atoms else None


# ---------------------------------------------------------------------------
# reports


def module_inequality_report(
    f: FunctionSpec,
    g: FunctionSpec,
    p: float,
    theta: float,
    a: WeightSpec,
    eps_bar=None,
    m: int = 96,
    quad_tol: float = 1e-7,
    conv_r: float = 40.0,
    conv_n: int = 2**12,
    tolerances: Tolerances = Tolerances(),
) -> VerificationReport:
    """Convolution-module bound: ||f*g||_grand vs weighted-L1(f) * grand(g).

    eps_bar (default p-1) may also be a sequence; the convolution and
    the two grand norms are computed once and each swept value adds its
    own trio of checks.  Per value the report computes both right-hand
    side weightings (the tighter mid-chain exponent eps/(p(p-eps)) and
    the relaxed eps/p), the official check being against the relaxed
    one, plus the fixed-eps slice inequality

        eps^theta ||f*g||_{p-eps, a^(eps/p)} <= ||f||_{L1(a^mid)} ||g||_grand

    which holds for every eps in (0, p-1] by Minkowski's integral
    inequality and submultiplicativity.  A non-Beurling weight refuses.
    """
    if not a.claims_beurling:
        raise ValueError("module inequality requires a Beurling weight")
    if eps_bar is None:
        eps_values = [p - 1.0]
    elif np.isscalar(eps_bar):
        eps_values = [float(eps_bar)]
    else:
        eps_values = [float(e) for e in eps_bar]
    for e in eps_values:
        if not 0.0 < e <= p - 1.0 + 1e-12:
            raise ValueError(f"eps_bar={e} must lie in (0, p-1]")
    rep = VerificationReport("module-inequality", tolerances=tolerances)
    gp = GrandNormParams(p=p, theta=theta, weight=a, m=m, quad_tol=quad_tol)
    conv = convolve(f, g, conv_r, conv_n)
    lhs_res = grand_norm(conv.spec, gp)
    g_res = grand_norm(g, gp)
    lhs = lhs_res.value
    lhs_err = lhs_res.error_at_max + conv.err_estimate
    from .grand import phi_at

    for e in eps_values:
        tag = f"[eps_bar={e:g}]"
        mid_exp = e / (p * (p - e))
        l1_mid, e1 = weighted_lp_norm_with_error(f, 1.0, a, mid_exp, None, quad_tol)
        l1_loose, e2 = weighted_lp_norm_with_error(f, 1.0, a, e / p, None, quad_tol)
        rhs_tight = l1_mid * g_res.value
        rhs_loose = l1_loose * g_res.value
        rhs_err = (e1 + e2) * g_res.value + (l1_mid + l1_loose) * g_res.error_at_max
        rep.add(Check(
            name=f"module-bound{tag}",
            statement="grand norm of f*g <= L1(a^(eps/p)) norm of f times grand norm of g",
            lhs=lhs, rhs=rhs_loose,
            passed=tolerances.leq(lhs, rhs_loose, lhs_err + rhs_err),
            detail={"eps_bar": e, "l1_weighted": l1_loose,
                    "conv_error": conv.err_estimate},
        ))
        rep.add(Check(
            name=f"module-bound-tight{tag}",
            statement="grand norm of f*g <= L1(a^(eps/(p(p-eps)))) norm of f times grand norm of g",
            lhs=lhs, rhs=rhs_tight,
            passed=tolerances.leq(lhs, rhs_tight, lhs_err + rhs_err),
            detail={"eps_bar": e, "l1_weighted": l1_mid,
                    "conv_error": conv.err_estimate},
        ))
        slice_pt = phi_at(conv.spec, gp, e)
        rep.add(Check(
            name=f"module-bound-slice{tag}",
            statement="fixed-eps slice of the left norm <= tight right-hand side",
            lhs=slice_pt.phi, rhs=rhs_tight,
            passed=tolerances.leq(slice_pt.phi, rhs_tight,
                                  slice_pt.err + lhs_err + rhs_err),
            detail={"eps_bar": e},
        ))
    return rep


def fourier_side_inequality_report(
    f: FunctionSpec,
    g: FunctionSpec,
    q: float,
    theta2: float,
    b: WeightSpec | None,
    a: WeightSpec | None = None,
    p: float = 2.0,
    eps_bar: float | None = None,
    m: int = 96,
    quad_tol: float = 1e-7,
    fft_r: float = 40.0,
    fft_n: int = 2**13,
    tolerances: Tolerances = Tolerances(),
) -> VerificationReport:
    """Frequency-side product bound:

        || Ff * Fg ||_{grand(q, theta2, b)}
            <= ||f||_{L1(a^(eps/p))} * || Fg ||_{grand(q, theta2, b)}

    using sup|Ff| <= integral of |f| <= weighted L1 norm (the weight is
    at least 1 for Beurling weights).  The boundedness step is reported
    as its own check.
    """
    if eps_bar is None:
        eps_bar = p - 1.0
    rep = VerificationReport(f"fourier-side-inequality[eps_bar={eps_bar:g}]",
                             tolerances=tolerances)
    gq = GrandNormParams(p=q, theta=theta2, weight=b, m=m, quad_tol=quad_tol)
    tf = transform_norms(f, fft_r, fft_n)
    tg = transform_norms(g, fft_r, fft_n)

    gam = dual_grid(fft_r, fft_n)
    Ff = _transform_values(tf, gam)
    Fg = _transform_values(tg, gam)
    prod_mags = np.abs(Ff) * np.abs(Fg)
    tau = (tf.transform_error * float(np.max(np.abs(Fg)))
           + tg.transform_error * float(np.max(np.abs(Ff)))
           + tf.transform_error * tg.transform_error)
    atoms = _product_atoms(f, g)
    prod_spec = sampled(gam, prod_mags, tail=atoms)
    prod_res = grand_norm(prod_spec, gq)
    if tau > 0.0 and prod_res.finite:
        hi_res = grand_norm(sampled(gam, prod_mags + tau, tail=atoms), gq)
        if hi_res.finite:
            prod_res.error_at_max += max(hi_res.value - prod_res.value, 0.0)
    g_res = tg.grand(gq)

    l1_f = integrate(IntegralTask(f, 1.0, tol=quad_tol)).value
    if a is not None:
        l1_weighted, _ = weighted_lp_norm_with_error(f, 1.0, a, eps_bar / p, None, quad_tol)
    else:
        l1_weighted = l1_f
    sup_Ff = float(np.max(np.abs(Ff)))

    rep.add(Check(
        name="transform-bounded",
        statement="sup |Ff| <= integral of |f|",
        lhs=sup_Ff, rhs=l1_f,
        passed=tolerances.leq(sup_Ff, l1_f, tf.transform_error),
        detail={"transform_error": tf.transform_error},
    ))
    lhs = prod_res.value
    err = prod_res.error_at_max
    rhs = l1_weighted * g_res.value
    rep.add(Check(
        name="product-bound",
        statement="grand norm of Ff*Fg <= weighted L1 norm of f times grand norm of Fg",
        lhs=lhs, rhs=rhs,
        passed=tolerances.leq(lhs, rhs, err + l1_weighted * g_res.error_at_max),
        detail={"eps_bar": eps_bar, "sup_Ff": sup_Ff, "product_tau": tau},
    ))
    return rep


def _transform_values(tn: TransformNorms, gam: np.ndarray) -> np.ndarray:
    if tn.strategy == "direct" or tn.strategy == "grid":
        src = tn.spec if tn.strategy == "direct" else None
        if src is not None:
            return np.asarray(evaluate(src, gam.reshape(-1, 1)))
    # sampled magnitudes live on their own grid; interpolate
    grid = np.asarray(tn.spec.grid)
    vals = np.asarray(tn.spec.values)
    return np.interp(gam, grid, vals, left=0.0, right=0.0)


def _product_atoms(f: FunctionSpec, g: FunctionSpec):
    cf = transform_certificate(f)
    cg = transform_certificate(g)
    if cf is None or cg is None:
        return None
    atoms = []
    for x in cf.atoms:
        for y in cg.atoms:
            z = x.times(y)
            atoms.append((z.C, z.alpha, z.beta, z.spow, z.valid_from))
    return tuple(atoms) if atoms else None


def weight_min_on_box(w: WeightSpec, box: Box) -> float:
    """Exact minimum of the (radially monotone) catalog weights over a box."""
    closest = box.closest_point_to_origin()
    r_min = float(np.linalg.norm(closest))
    r_max = box.outer_radius
    k = w.kind
    if k == "constant":
        return w.c
    if k in ("power_growth", "exp_growth"):
        r = r_min
        return (1.0 + r) ** w.s if k == "power_growth" else math.exp(w.s * r)
    if k == "power_decay":
        return (1.0 + r_max) ** (-w.s)
    if k == "gaussian":
        return math.exp(-w.q * r_max**2)
    raise ValueError(f"unknown weight kind {k!r}")


def local_l1_bound_report(
    f: FunctionSpec,
    E: Box,
    params: APNormParams,
    quad_tol: float = 1e-9,
    tolerances: Tolerances = Tolerances(),
) -> VerificationReport:
    """Local integrability bound: int_E |f| <= C0 * pair norm of f.

    C0 is the sup over the eps grid of the Hoelder companion constant

        C1(eps) = || chi_E a^(-eps/(p(p-eps))) ||_{(p-eps)'} ,

    with the conjugate-exponent norm computed by quadrature, and the
    eps = p-1 endpoint (conjugate exponent infinity) evaluated as
    (min_E a)^(-(p-1)/p).  Requires a >= 1 on E.
    """
    gp = params.time
    p = gp.p
    a = gp.weight
    if a is None:
        from .functions import constant_weight

        a = constant_weight(1.0, dim=E.dim)
    if weight_min_on_box(a, E) < 1.0 - 1e-12:
        raise ValueError("local bound requires the weight to be >= 1 on E")
    rep = VerificationReport("local-l1-bound", tolerances=tolerances)

    eps_grid = _hybrid_grid(gp)
    c_best, eps_best = -math.inf, math.nan
    for eps in eps_grid:
        c1 = _c1_constant(a, E, p, float(eps), quad_tol)
        if c1 > c_best:
            c_best, eps_best = c1, float(eps)
    lhs_int = integrate(IntegralTask(f, 1.0, domain=E, tol=quad_tol))
    nrm = ap_norm(f, params)
    rhs = c_best * nrm.value
    rep.add(Check(
        name="local-l1",
        statement="integral of |f| over a compact box <= C0 times the pair norm",
        lhs=lhs_int.value, rhs=rhs,
        passed=tolerances.leq(lhs_int.value, rhs,
                              lhs_int.total_error + c_best * nrm.error_bound),
        detail={"C0": c_best, "argmax_eps": eps_best,
                "pair_norm": nrm.value, "box_measure": E.measure},
    ))
    rep.add(Check(
        name="local-l1-constant",
        statement="companion constant C0 = sup over the eps grid of C1(eps)",
        lhs=c_best, rhs=c_best, passed=None,
        detail={"C0": c_best, "argmax_eps": eps_best},
    ))
    return rep


def _c1_constant(a: WeightSpec, E: Box, p: float, eps: float,
                 quad_tol: float) -> float:
    r = p - eps
    if abs(r - 1.0) < 1e-12:
        return weight_min_on_box(a, E) ** (-(p - 1.0) / p)
    rp = r / (r - 1.0)
    kappa = -eps * rp / (p * r)
    val, _ = integrate_weight_power(a, kappa, E, quad_tol)
    return val ** (1.0 / rp)


def theorem6_inclusion_report(
    f: FunctionSpec,
    p: float, q: float, theta1: float, theta2: float,
    a: WeightSpec, b: WeightSpec,
    eps: float, eta: float,
    m: int = 128,
    quad_tol: float = 1e-8,
    fft_r: float = 40.0,
    fft_n: int = 2**13,
    tolerances: Tolerances = Tolerances(),
) -> VerificationReport:
    """Three-space comparison with explicit constants.

    Norms: plain pair ||f||_p + ||Ff||_q; grand pair; fixed-exponent
    weighted pair ||f||_{p-eps, a^(eps/p)} + ||Ff||_{q-eta, b^(eta/q)}.
    Verified inequalities (both with derivable constants):

        weighted pair <= max(eps^-theta1, eta^-theta2) * grand pair
        grand pair    <= D * plain pair,
        D = max over sides of sup_eps eps^theta ||w||_1^(eps/(r(r-eps)))

    The second constant needs integrable grandizers; non-integrable
    weights refuse.
    """
    from .functions import weight_l1_closed_form

    ok_a, a_l1 = weight_l1_closed_form(a)
    ok_b, b_l1 = weight_l1_closed_form(b)
    if not (ok_a and ok_b):
        raise ValueError("inclusion constants require integrable grandizers")
    if not (0.0 < eps <= p - 1.0 and 0.0 < eta <= q - 1.0):
        raise ValueError("eps in (0, p-1], eta in (0, q-1] required")
    rep = VerificationReport(f"pair-inclusions[eps={eps:g},eta={eta:g}]",
                             tolerances=tolerances)
    params = ap_params(p, q, theta1, theta2, a, b, m=m, quad_tol=quad_tol,
                       fft_r=fft_r, fft_n=fft_n)
    tn = transform_norms(f, fft_r, fft_n)

    f_lp, ef1 = weighted_lp_norm_with_error(f, p, None, 0.0, None, quad_tol)
    F_lq, ef2 = tn.lp(q, None, 0.0, quad_tol)
    plain = f_lp + F_lq
    grand_res = ap_norm(f, params)
    grand = grand_res.value
    f_pair, ef3 = weighted_lp_norm_with_error(f, p - eps, a, eps / p, None, quad_tol)
    F_pair, ef4 = tn.lp(q - eta, b, eta / q, quad_tol)
    weighted_pair = f_pair + F_pair

    C_const = max(eps ** (-theta1), eta ** (-theta2))
    grid = np.linspace(1e-6, 1.0, 2048)
    D1 = float(np.max((grid * (p - 1.0)) ** theta1
                      * a_l1 ** (grid * (p - 1.0) / (p * (p - grid * (p - 1.0))))))
    D2 = float(np.max((grid * (q - 1.0)) ** theta2
                      * b_l1 ** (grid * (q - 1.0) / (q * (q - grid * (q - 1.0))))))
    D_const = max(D1, D2, 1.0)

    err_all = ef1 + ef2 + ef3 + ef4 + grand_res.error_bound
    rep.add(Check(
        name="inclusion-weighted-pair",
        statement="fixed-exponent weighted pair norm <= max(eps^-theta1, eta^-theta2) * grand pair norm",
        lhs=weighted_pair, rhs=C_const * grand,
        passed=tolerances.leq(weighted_pair, C_const * grand, err_all * (1 + C_const)),
        detail={"C": C_const, "measured_ratio": weighted_pair / grand if grand else math.nan},
    ))
    rep.add(Check(
        name="inclusion-grand",
        statement="grand pair norm <= D * plain pair norm with D from the L1 grandizer bound",
        lhs=grand, rhs=D_const * plain,
        passed=tolerances.leq(grand, D_const * plain, err_all * (1 + D_const)),
        detail={"D": D_const, "D_time": D1, "D_freq": D2,
                "measured_ratio": grand / plain if plain else math.nan},
    ))
    rep.add(Check(
        name="inclusion-norms-finite",
        statement="all three pair norms are finite",
        lhs=max(plain, grand, weighted_pair), rhs=math.inf,
        passed=all(math.isfinite(v) for v in (plain, grand, weighted_pair)),
        detail={"plain": plain, "grand": grand, "weighted_pair": weighted_pair},
    ))
    return rep
