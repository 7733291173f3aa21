"""grandlp: grand Lebesgue norms, transform-pair norms, and numerical
verification of their inequalities on R^n.

The package is organized around immutable function/weight specs
(grandlp.functions), certified adaptive quadrature (grandlp.quadrature),
the eps-sup norm machinery (grandlp.grand), closed-form and FFT
transforms (grandlp.fourier), the paired time/frequency norm and its
inequality reports (grandlp.ap_space), and named verification suites
(grandlp.verify).  `python -m grandlp.cli --help` or the `grandlp`
entry point expose the command-line front end.
"""

from .functions import (
    Box,
    FunctionSpec,
    WeightSpec,
    add,
    box1d,
    check_submultiplicative,
    constant_weight,
    evaluate,
    exp_abs,
    exp_growth_weight,
    gaussian,
    gaussian_weight,
    grandizer_integrable,
    indicator,
    interval_family,
    lorentzian,
    modulate,
    poly_gaussian,
    power_decay,
    power_decay_weight,
    power_growth_weight,
    restrict,
    sampled,
    scaled,
    translate,
)
from .quadrature import (
    AccuracyError,
    CertificateError,
    DivergenceError,
    IntegralResult,
    IntegralTask,
    integrate,
    weighted_lp_norm,
)
from .grand import (
    GrandNormParams,
    GrandNormResult,
    epsilon_curve,
    grand_norm,
    vanishing_limit,
)
from .fourier import TransformResult, fourier_analytic, fourier_numeric, transform_sup_error
from .ap_space import (
    APNormParams,
    MembershipError,
    ap_norm,
    ap_params,
    convolve,
    fourier_side_inequality_report,
    local_l1_bound_report,
    module_inequality_report,
    theorem6_inclusion_report,
)
from .verify import SUITES, SuiteConfig, prop5_sequence, prop6_check, run_suite

__version__ = "0.1.0"
