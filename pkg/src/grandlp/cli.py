"""Command-line front end: norms, curves, transforms, verification suites.

Subcommands: grand-norm, ap-norm, fourier, curve, verify, prop5.

Exit codes (stable):
    0  success
    2  usage error (bad arguments or malformed input JSON)
    3  membership failure (the requested norm is infinite)
    4  accuracy failure (quadrature could not reach the tolerance)
    5  suite failure (a verification check failed)

Numeric defaults live in DEFAULTS below and every one of them is
overridable by a flag, so reports are reproducible from the command line
alone.  Output files are written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import functions as fn
from .functions import spec_from_json, weight_from_json, box_from_json
from .quadrature import AccuracyError, CertificateError, DivergenceError
from .grand import GrandNormParams, epsilon_curve, grand_norm
from .fourier import fourier_analytic, fourier_numeric
from .ap_space import MembershipError, ap_norm, ap_params
from .verify import SUITES, SuiteConfig, prop5_sequence, run_suite

__all__ = ["main", "DEFAULTS"]

DEFAULTS = {
    "eps_grid": 256,        # eps-grid size m
    "tol": 1e-8,            # quadrature relative tolerance
    "fft_n": 2**14,         # numeric transform size
    "fft_r": 40.0,          # numeric transform half-width
    "refine": 3,            # golden-section refinement rounds
}

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MEMBERSHIP = 3
EXIT_ACCURACY = 4
EXIT_SUITE = 5


class UsageError(ValueError):
    pass


def _load_json_arg(raw: str, what: str) -> dict:
    """Accept either inline JSON or a path to a JSON file."""
    if raw.strip().startswith("{"):
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise UsageError(f"inline {what} is not valid JSON: {exc}") from None
    if not os.path.exists(raw):
        raise UsageError(f"{what} file not found: {raw}")
    with open(raw) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{what} file is not valid JSON: {exc}") from None


def _function_from_arg(raw: str) -> fn.FunctionSpec:
    obj = _load_json_arg(raw, "function spec")
    try:
        return spec_from_json(obj)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad function spec: {exc}") from None


def _weight_from_arg(raw: str | None) -> fn.WeightSpec | None:
    if raw is None:
        return None
    obj = _load_json_arg(raw, "weight spec")
    try:
        return weight_from_json(obj)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad weight spec: {exc}") from None


def _write_atomic(path: str, data: str):
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, payload: dict, table: str | None = None):
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "table":
        text = (table or _dict_table(payload)) + "\n"
    else:
        raise UsageError("csv format applies to curve and fourier output; "
                         "use json or table here")
    if getattr(args, "output", None):
        _write_atomic(args.output, text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)


def _dict_table(payload: dict, prefix: str = "") -> str:
    lines = []
    for k, v in payload.items():
        if isinstance(v, dict):
            lines.append(_dict_table(v, prefix + k + "."))
        elif isinstance(v, list):
            lines.append(f"{prefix}{k}: [{len(v)} rows]")
        else:
            lines.append(f"{prefix}{k}: {v}")
    return "\n".join(lines)


def _curve_csv(curve) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["epsilon", "phi", "err_bound"])
    for c in curve:
        w.writerow([f"{c.eps:.17g}", f"{c.phi:.17g}", f"{c.err:.17g}"])
    return buf.getvalue()


def _plot_curve(curve, path: str):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    eps = [c.eps for c in curve]
    phi = [c.phi for c in curve]
    figure, ax = plt.subplots(figsize=(6, 4))
    ax.plot(eps, phi, lw=1.2)
    ax.set_xlabel("epsilon")
    ax.set_ylabel("phi(epsilon)")
    ax.set_title("grand-norm curve")
    figure.tight_layout()
    figure.savefig(path, format="svg")
    plt.close(figure)


def _grand_params_from_args(args, weight) -> GrandNormParams:
    domain = None
    if getattr(args, "domain", None):
        obj = _load_json_arg(args.domain, "domain box")
        domain = box_from_json(obj)
    return GrandNormParams(
        p=args.p, theta=args.theta1, weight=weight,
        variant=args.variant, m=args.eps_grid, refine_passes=args.refine,
        quad_tol=args.tol, domain=domain,
    )


def cmd_grand_norm(args) -> int:
    f = _function_from_arg(args.input)
    weight = _weight_from_arg(args.grandizer)
    params = _grand_params_from_args(args, weight)
    res = grand_norm(f, params)
    if not res.finite:
        payload = res.to_dict()
        payload["function"] = fn.describe(f)
        _emit(args, payload)
        print("membership failure: the grand norm is infinite", file=sys.stderr)
        return EXIT_MEMBERSHIP
    payload = res.to_dict()
    payload["function"] = fn.describe(f)
    _emit(args, payload)
    if args.plot:
        base = os.path.splitext(args.output or "grand_norm.json")[0]
        _write_atomic(base + ".curve.csv", _curve_csv(res.curve))
        _plot_curve(res.curve, base + ".curve.svg")
        print(f"wrote {base}.curve.csv and {base}.curve.svg")
    return EXIT_OK if res.accuracy_ok else EXIT_ACCURACY


def cmd_curve(args) -> int:
    f = _function_from_arg(args.input)
    weight = _weight_from_arg(args.grandizer)
    params = _grand_params_from_args(args, weight)
    curve = epsilon_curve(f, params)
    text = _curve_csv(curve)
    if args.output:
        _write_atomic(args.output, text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    if args.plot:
        base = os.path.splitext(args.output or "curve.csv")[0]
        _plot_curve(curve, base + ".svg")
        print(f"wrote {base}.svg")
    return EXIT_OK


def cmd_ap_norm(args) -> int:
    f = _function_from_arg(args.input)
    a = _weight_from_arg(args.grandizer)
    b = _weight_from_arg(args.weight)
    params = ap_params(args.p, args.q, args.theta1, args.theta2, a, b,
                       m=args.eps_grid, refine_passes=args.refine,
                       quad_tol=args.tol, fft_r=args.fft_r, fft_n=args.fft_n)
    res = ap_norm(f, params)
    payload = res.to_dict()
    payload["function"] = fn.describe(f)
    _emit(args, payload)
    ok = res.time_result.accuracy_ok and res.freq_result.accuracy_ok
    return EXIT_OK if ok else EXIT_ACCURACY


def cmd_fourier(args) -> int:
    f = _function_from_arg(args.input)
    analytic = fourier_analytic(f)
    if analytic is not None:
        print(f"analytic: {fn.describe(analytic.spec, 'g')}")
    else:
        print("analytic transform unsupported for this spec; numeric only",
              file=sys.stderr)
    tr = fourier_numeric(f, args.fft_r, args.fft_n)
    rows = ["gamma,re,im"]
    for g, v in zip(np.asarray(tr.gamma).ravel(), tr.values.ravel()):
        rows.append(f"{g:.17g},{v.real:.17g},{v.imag:.17g}")
    text = "\n".join(rows) + "\n"
    if args.output:
        _write_atomic(args.output, text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    print(f"error estimate: {tr.err_estimate:.3e} "
          f"(truncation {tr.truncation_error:.3e}, "
          f"discretization {tr.discretization_error:.3e})", file=sys.stderr)
    if tr.aliasing_warning:
        print("warning: spectral energy at the grid edge; increase --fft-n/--fft-r",
              file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        config = SuiteConfig(
            suite=args.suite, m=args.eps_grid, quad_tol=args.tol,
            fft_r=args.fft_r, fft_n=args.fft_n,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_suite(config)
    payload = report.to_dict()
    _emit(args, payload, table=report.to_table())
    return EXIT_OK if report.all_passed else EXIT_SUITE


def cmd_prop5(args) -> int:
    rows = prop5_sequence(args.p, args.theta1, args.n_max)
    payload = {
        "schema_version": 1,
        "p": args.p,
        "theta": args.theta1,
        "rows": [
            {"n": r.n, "norm": r.norm, "err_bound": r.err,
             "lower_bound_expression": r.lower_bound}
            for r in rows
        ],
    }
    _emit(args, payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grandlp",
        description="grand Lebesgue norms, transform-pair norms, and "
                    "verification suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, input_required=True):
        if input_required:
            p.add_argument("--input", required=True,
                           help="function spec: inline JSON or a path")
        p.add_argument("--output", help="output file (stdout when omitted)")
        p.add_argument("--format", default="json", choices=["json", "csv", "table"])
        p.add_argument("--tol", type=float, default=DEFAULTS["tol"],
                       help="quadrature relative tolerance")
        p.add_argument("--eps-grid", type=int, default=DEFAULTS["eps_grid"],
                       help="eps-grid size m")
        p.add_argument("--refine", type=int, default=DEFAULTS["refine"],
                       help="golden-section refinement rounds")
        p.add_argument("--fft-n", type=int, default=DEFAULTS["fft_n"])
        p.add_argument("--fft-r", type=float, default=DEFAULTS["fft_r"])

    g = sub.add_parser("grand-norm", help="grand norm of a function")
    common(g)
    g.add_argument("--p", type=float, required=True)
    g.add_argument("--theta1", type=float, default=1.0)
    g.add_argument("--grandizer", help="weight spec JSON (time side)")
    g.add_argument("--variant", default="generalized",
                   choices=["generalized", "equivalent", "classical", "plain_theta"])
    g.add_argument("--domain", help="box JSON; whole space when omitted")
    g.add_argument("--plot", action="store_true", help="write the curve as CSV + SVG")
    g.set_defaults(func=cmd_grand_norm)

    c = sub.add_parser("curve", help="eps-curve of the grand norm as CSV")
    common(c)
    c.add_argument("--p", type=float, required=True)
    c.add_argument("--theta1", type=float, default=1.0)
    c.add_argument("--grandizer", help="weight spec JSON (time side)")
    c.add_argument("--variant", default="generalized",
                   choices=["generalized", "equivalent", "classical", "plain_theta"])
    c.add_argument("--domain", help="box JSON; whole space when omitted")
    c.add_argument("--plot", action="store_true")
    c.set_defaults(func=cmd_curve)

    a = sub.add_parser("ap-norm", help="time+frequency pair norm")
    common(a)
    a.add_argument("--p", type=float, required=True)
    a.add_argument("--q", type=float, required=True)
    a.add_argument("--theta1", type=float, default=1.0)
    a.add_argument("--theta2", type=float, default=1.0)
    a.add_argument("--grandizer", help="time-side weight JSON")
    a.add_argument("--weight", help="frequency-side weight JSON")
    a.set_defaults(func=cmd_ap_norm)

    f = sub.add_parser("fourier", help="transform: analytic form + numeric CSV")
    common(f)
    f.set_defaults(func=cmd_fourier)

    v = sub.add_parser("verify", help="run a verification suite")
    common(v, input_required=False)
    v.add_argument("--suite", required=True,
                   help="one of: " + ", ".join(SUITES))
    # suites run many norms; their documented defaults are lighter
    v.set_defaults(func=cmd_verify, eps_grid=24, tol=1e-7, fft_n=2**12)

    pr = sub.add_parser("prop5", help="vanishing-set norm sequence report")
    common(pr, input_required=False)
    pr.add_argument("--p", type=float, default=2.0)
    pr.add_argument("--theta1", type=float, default=1.0)
    pr.add_argument("--n-max", type=int, default=16)
    pr.set_defaults(func=cmd_prop5)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MembershipError as exc:
        print(f"membership failure ({exc.side} side): {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    except DivergenceError as exc:
        print(f"membership failure: {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    except CertificateError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AccuracyError as exc:
        print(f"accuracy failure: {exc}", file=sys.stderr)
        return EXIT_ACCURACY


if __name__ == "__main__":
    sys.exit(main())
