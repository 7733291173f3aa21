"""Grand Lebesgue norms: sup over eps in (0, p-1] of weighted L^(p-eps) norms.

Norm variants (phi(eps) is the quantity whose sup is taken):

  generalized   phi = eps^theta      * ||f||_{L^(p-eps)(w^(eps/p))}
  equivalent    phi = eps^(theta/(p-eps)) * ||f||_{L^(p-eps)(w^eps)}
  classical     phi = eps^(1/(p-eps))     * ||f||_{L^(p-eps)}
  plain_theta   phi = eps^(theta/(p-eps)) * ||f||_{L^(p-eps)}

The sup over the open-at-zero interval is approximated on a hybrid grid
(m uniform points on (0, p-1] plus a geometric ladder toward 0 down to
(p-1)/eps_min_div), then sharpened by golden-section rounds around the
best sample.  Behavior below the smallest grid point is probed separately
by vanishing_limit, and boundary_flag records when the best sample sits
at a grid edge, since attainment of the sup is not guaranteed anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .functions import Box, FunctionSpec, WeightSpec, weight_l1_closed_form
from .quadrature import (
    AccuracyError,
    DivergenceError,
    IntegralTask,
    integrate,
    _norm_from_integral,
)

__all__ = [
    "GrandNormParams",
    "CurvePoint",
    "GrandNormResult",
    "VanishingLimitResult",
    "grand_norm",
    "epsilon_curve",
    "vanishing_limit",
    "phi_at",
    "holder_phi_bound",
]

VARIANTS = ("generalized", "equivalent", "classical", "plain_theta")

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GrandNormParams:
    p: float
    theta: float = 1.0
    weight: WeightSpec | None = None
    variant: str = "generalized"
    m: int = 256
    refine_passes: int = 3
    quad_tol: float = 1e-8
    domain: Box | None = None
    eps_min_div: float = 4096.0
    ceiling: float = 1e12

    def __post_init__(self):
        if not self.p > 1.0:
            raise ValueError("p must be > 1")
        if self.theta < 0.0:
            raise ValueError("theta must be >= 0")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.m < 8:
            raise ValueError("eps-grid size m must be >= 8")
        if self.refine_passes < 1:
            raise ValueError("refine_passes must be >= 1")
        if self.quad_tol <= 0:
            raise ValueError("quad_tol must be > 0")

    @property
    def eps_max(self) -> float:
        return self.p - 1.0


@dataclass(frozen=True)
class CurvePoint:
    eps: float
    phi: float
    err: float
    exact: bool = True  # False when quadrature returned a best-effort estimate


@dataclass
class GrandNormResult:
    value: float
    argmax_eps: float
    curve: list[CurvePoint]
    boundary_flag: str | None = None  # None | "eps_to_zero" | "eps_max"
    finite: bool = True
    accuracy_ok: bool = True
    diverged_at: float | None = None
    error_at_max: float = 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "value": self.value if math.isfinite(self.value) else "inf",
            "argmax_eps": self.argmax_eps,
            "boundary_flag": self.boundary_flag,
            "finite": self.finite,
            "accuracy_ok": self.accuracy_ok,
            "diverged_at": self.diverged_at,
            "error_at_max": self.error_at_max,
            "curve": [
                {"eps": c.eps, "phi": c.phi, "err_bound": c.err, "exact": c.exact}
                for c in self.curve
            ],
        }


def _variant_exponents(params: GrandNormParams, eps: float):
    """(prefactor, weight, weight exponent) for phi at this eps."""
    p, th = params.p, params.theta
    v = params.variant
    if v == "generalized":
        return eps**th, params.weight, eps / p
    if v == "equivalent":
        return eps ** (th / (p - eps)), params.weight, eps
    if v == "classical":
        return eps ** (1.0 / (p - eps)), None, 0.0
    return eps ** (th / (p - eps)), None, 0.0  # plain_theta


def phi_at(f: FunctionSpec, params: GrandNormParams, eps: float) -> CurvePoint:
    """One sample of the eps-curve; raises DivergenceError when the
    underlying integral has a non-integrable envelope at this eps."""
    if not 0.0 < eps <= params.eps_max + 1e-12:
        raise ValueError(f"eps={eps} outside (0, p-1]")
    eps = min(eps, params.eps_max)
    pref, w, wexp = _variant_exponents(params, eps)
    p_eff = params.p - eps
    task = IntegralTask(f, p_eff, w, wexp, params.domain, params.quad_tol)
    try:
        res = integrate(task)
        norm, err = _norm_from_integral(res.value, res.total_error, p_eff)
        return CurvePoint(eps, pref * norm, pref * err, exact=True)
    except AccuracyError as exc:
        total = exc.error_bound + exc.tail_bound
        norm, err = _norm_from_integral(max(exc.estimate, 0.0), total, p_eff)
        return CurvePoint(eps, pref * norm, pref * err, exact=False)


def _hybrid_grid(params: GrandNormParams) -> np.ndarray:
    e_max = params.eps_max
    uniform = e_max * np.arange(1, params.m + 1) / params.m
    k_max = max(1, int(math.ceil(math.log2(params.eps_min_div))))
    geometric = e_max * 0.5 ** np.arange(1, k_max + 1)
    grid = np.unique(np.concatenate([uniform, geometric]))
    return grid


def _uniform_grid(params: GrandNormParams) -> np.ndarray:
    e_max = params.eps_max
    return e_max * np.arange(1, params.m + 1) / params.m


def epsilon_curve(f: FunctionSpec, params: GrandNormParams) -> list[CurvePoint]:
    """phi samples on the monotone uniform grid with eps_min = (p-1)/m."""
    return [phi_at(f, params, float(e)) for e in _uniform_grid(params)]


def grand_norm(f: FunctionSpec, params: GrandNormParams) -> GrandNormResult:
    """Supremum of the eps-curve over the hybrid grid plus refinement.

    An infinite-norm verdict (finite=False, value=inf) is returned when
    any grid integral diverges or any sample exceeds params.ceiling;
    the partial curve is attached either way.
    """
    if params.weight is not None and params.weight.dim != f.dim:
        raise ValueError("function and grandizer weight dims differ")
    samples: list[CurvePoint] = []

    def sample(eps: float) -> CurvePoint | None:
        pt = phi_at(f, params, eps)
        samples.append(pt)
        return pt

    grid = _hybrid_grid(params)
    for e in grid:
        try:
            pt = sample(float(e))
        except DivergenceError:
            samples_sorted = sorted(samples, key=lambda c: c.eps)
            return GrandNormResult(
                value=math.inf, argmax_eps=float(e), curve=samples_sorted,
                finite=False, diverged_at=float(e),
            )
        if pt.phi > params.ceiling:
            return GrandNormResult(
                value=math.inf, argmax_eps=float(e),
                curve=sorted(samples, key=lambda c: c.eps),
                finite=False,
            )

    # golden-section rounds around the best sample
    for _ in range(params.refine_passes):
        samples.sort(key=lambda c: c.eps)
        best = max(range(len(samples)), key=lambda i: samples[i].phi)
        lo = samples[best - 1].eps if best > 0 else samples[best].eps / 2.0
        hi = samples[best + 1].eps if best + 1 < len(samples) else params.eps_max
        if hi - lo <= 1e-14 * params.eps_max:
            break
        try:
            _golden_refine(sample, lo, hi, iters=16)
        except DivergenceError:
            return GrandNormResult(
                value=math.inf, argmax_eps=float(lo),
                curve=sorted(samples, key=lambda c: c.eps),
                finite=False, diverged_at=float(lo),
            )

    samples.sort(key=lambda c: c.eps)
    best = max(range(len(samples)), key=lambda i: samples[i].phi)
    top = samples[best]
    flag = None
    if best == 0:
        flag = "eps_to_zero"
    elif abs(top.eps - params.eps_max) <= 1e-12 * params.eps_max:
        flag = "eps_max"
    return GrandNormResult(
        value=top.phi,
        argmax_eps=top.eps,
        curve=samples,
        boundary_flag=flag,
        accuracy_ok=all(c.exact for c in samples),
        error_at_max=top.err,
    )


def _golden_refine(sample, lo: float, hi: float, iters: int = 16):
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc = sample(c).phi
    fd = sample(d).phi
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = sample(c).phi
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = sample(d).phi


@dataclass
class VanishingLimitResult:
    sequence: list[CurvePoint]          # phi along eps_k = (p-1) 2^-k
    limit_estimate: float
    belongs_to_closure: bool
    verdict: str                        # "in_closure" | "not_in_closure" | "undecided"

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "limit_estimate": self.limit_estimate,
            "belongs_to_closure": self.belongs_to_closure,
            "verdict": self.verdict,
            "sequence": [
                {"eps": c.eps, "phi": c.phi, "err_bound": c.err} for c in self.sequence
            ],
        }


def vanishing_limit(f: FunctionSpec, params: GrandNormParams, k_max: int = 20,
                    closure_tol: float = 1e-3, window: int = 5) -> VanishingLimitResult:
    """Probe phi along the geometric sequence eps_k = (p-1) 2^-k, k = 1..k_max.

    belongs_to_closure is True iff the tail of the sequence is
    nonincreasing (within error bounds) and the last value is below
    closure_tol.  A tail that is monotone but stabilized above the
    threshold yields "not_in_closure"; a tail that is nonmonotone, or
    still falling without reaching the threshold, yields "undecided".
    """
    if k_max < window + 1:
        raise ValueError("k_max too small for the decision window")
    seq: list[CurvePoint] = []
    for k in range(1, k_max + 1):
        eps = params.eps_max * 2.0 ** (-k)
        try:
            seq.append(phi_at(f, params, eps))
        except DivergenceError:
            seq.append(CurvePoint(eps, math.inf, math.inf, exact=False))
            return VanishingLimitResult(seq, math.inf, False, "not_in_closure")

    tail = seq[-window:]
    noninc = all(
        tail[i + 1].phi <= tail[i].phi * (1.0 + 1e-9) + tail[i].err + tail[i + 1].err
        for i in range(len(tail) - 1)
    )
    increasing = all(
        tail[i + 1].phi >= tail[i].phi * (1.0 - 1e-9) - tail[i].err - tail[i + 1].err
        for i in range(len(tail) - 1)
    ) and tail[-1].phi > tail[0].phi
    last = tail[-1].phi

    if noninc and last < closure_tol:
        verdict = "in_closure"
    elif increasing and last >= closure_tol:
        verdict = "not_in_closure"
    elif noninc:
        span = tail[0].phi - tail[-1].phi
        rel = span / last if last > 0 else 0.0
        verdict = "not_in_closure" if rel < 0.02 else "undecided"
    else:
        verdict = "undecided"
    return VanishingLimitResult(seq, last, verdict == "in_closure", verdict)


def holder_phi_bound(f: FunctionSpec, params: GrandNormParams,
                     lp_tol: float = 1e-10):
    """Analytic dominating curve for the generalized variant when the
    grandizer is integrable:

        phi(eps) <= eps^theta * ||f||_p * ||w||_1^(eps / (p (p-eps)))

    Returns a callable eps -> bound.  Raises ValueError when the weight
    has no finite integral (the mechanism requires an L^1 grandizer).
    """
    if params.variant != "generalized":
        raise ValueError("bound derived for the generalized variant only")
    w = params.weight
    if w is None:
        raise ValueError("bound requires an explicit integrable grandizer")
    ok, w_l1 = weight_l1_closed_form(w)
    if not ok:
        raise ValueError("grandizer is not integrable; bound unavailable")
    from .quadrature import weighted_lp_norm

    f_lp = weighted_lp_norm(f, params.p, None, 0.0, params.domain, lp_tol)

    def bound(eps: float) -> float:
        return eps**params.theta * f_lp * w_l1 ** (eps / (params.p * (params.p - eps)))

    return bound
