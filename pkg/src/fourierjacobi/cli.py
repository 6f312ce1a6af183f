"""Command-line front end: series runs, exponent experiments, self-test.

Exit codes: 0 success, 1 a checked property failed, 2 usage error (also
argparse's own), 3 a quadrature or series failed to reach tolerance.
"""

import argparse
import json
import math
import sys

import numpy as np

from .errors import AccuracyError
from .specfun import JacobiParams, jacobi_r_table
from .series import (
    StepFunction,
    PowerWeight,
    CosinePoly,
    coefficient_series,
    decay_fit,
    counterexample_slope,
    sup_norm_slope,
)
from .mehler import mehler_r, mehler_limit_r
from .laguerre import (
    LaguerreStep,
    LaguerrePolynomial,
    LaguerreExpDamped,
    laguerre_coefficient_series,
    laguerre_bound_profile,
    step_identity_check,
)
from .jtransform import Indicator, ExpDecay, transform_sweep
from .selftest import run_all

__all__ = ["main", "build_parser"]


def _floats(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _parse_circle_function(text: str):
    """step:a,b[,...] | power:rho | cospoly:c0,c1,...

    Step breakpoints get unit values alternating 0,1,0,... so step:a,b is
    the characteristic function of [a,b].
    """
    kind, _, rest = text.partition(":")
    if kind == "step":
        breaks = _floats(rest)
        if not breaks:
            raise ValueError("step: needs at least one breakpoint")
        values = tuple(float((i + 1) % 2 == 0) for i in range(len(breaks) + 1))
        return StepFunction(tuple(breaks), values)
    if kind == "power":
        vals = _floats(rest)
        if len(vals) != 1:
            raise ValueError("power: takes exactly one exponent")
        return PowerWeight(vals[0])
    if kind == "cospoly":
        coeffs = _floats(rest)
        if not coeffs:
            raise ValueError("cospoly: needs coefficients")
        return CosinePoly(tuple(coeffs))
    raise ValueError(f"unknown function spec {text!r}")


def _parse_laguerre_function(text: str):
    """step:a (-> [0,a]) | step:a,b[,...] (alternating from 0) | poly:c0,...
    | damped:rate:c0,c1,..."""
    kind, _, rest = text.partition(":")
    if kind == "step":
        breaks = _floats(rest)
        if len(breaks) == 1:
            return LaguerreStep((breaks[0],), (1.0,))
        if not breaks:
            raise ValueError("step: needs at least one breakpoint")
        values = tuple(float(i % 2 == 1) for i in range(len(breaks)))
        return LaguerreStep(tuple(breaks), values)
    if kind == "poly":
        return LaguerrePolynomial(tuple(_floats(rest)))
    if kind == "damped":
        rate_text, _, coeff_text = rest.partition(":")
        return LaguerreExpDamped(tuple(_floats(coeff_text)), float(rate_text))
    raise ValueError(f"unknown half-line function spec {text!r}")


def _parse_transform_function(text: str, params: JacobiParams):
    """indicator:a,b | expdecay:rate:c0,c1,..."""
    kind, _, rest = text.partition(":")
    if kind == "indicator":
        vals = _floats(rest)
        if len(vals) != 2:
            raise ValueError("indicator: takes a,b")
        return Indicator(vals[0], vals[1])
    if kind == "expdecay":
        rate_text, _, coeff_text = rest.partition(":")
        return ExpDecay(tuple(_floats(coeff_text)), float(rate_text), params)
    raise ValueError(f"unknown transform function spec {text!r}")


def _write_text(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _emit_pairs(keys, values, header: str, fmt: str, out: str | None,
                meta: dict):
    if fmt == "csv":
        lines = [header]
        lines += [f"{k},{float(v)!r}" for k, v in zip(keys, values)]
        _write_text("\n".join(lines) + "\n", out)
    else:
        doc = dict(meta)
        doc["values"] = [float(v) for v in values]
        _write_text(json.dumps(doc, indent=2) + "\n", out)


def _cmd_coeffs(args) -> int:
    params = JacobiParams(args.alpha, args.beta)
    f = _parse_circle_function(args.function)
    series = coefficient_series(f, args.kmax, params,
                                normalization=args.normalization)
    if args.format == "csv":
        _write_text(series.to_csv(), args.out)
    else:
        _write_text(json.dumps(series.to_json_dict(), indent=2) + "\n",
                    args.out)
    return 0


def _cmd_decay(args) -> int:
    params = JacobiParams(args.alpha, args.beta)
    f = _parse_circle_function(args.function)
    series = coefficient_series(f, args.kmax, params)
    rep = decay_fit(series)
    print(f"window k in [{rep.window[0]}, {rep.window[1]}]")
    print(f"slope {rep.slope!r}")
    print(f"r_squared {rep.r_squared!r}")
    print(f"max_abs_tail {rep.max_abs_tail!r}")
    if rep.skipped:
        print(f"skipped {rep.skipped} zero entries")
    return 0


def _cmd_counterexample(args) -> int:
    rep = counterexample_slope(JacobiParams(args.alpha, args.beta), args.rho,
                               kmax=args.kmax)
    print(f"predicted exponent {rep.predicted_slope!r}")
    print(f"fitted exponent {rep.fit.slope!r} (r_squared {rep.fit.r_squared!r})")
    print(f"divergence regime: {'yes' if rep.divergence_regime else 'no'}")
    print("decade maxima " + ", ".join(repr(m) for m in rep.decade_maxima))
    gap = abs(rep.fit.slope - rep.predicted_slope)
    if gap > args.tol:
        print(f"FAIL: fitted exponent off by {gap!r} (tol {args.tol})")
        return 1
    return 0


def _cmd_opnorm(args) -> int:
    rep = sup_norm_slope(JacobiParams(args.alpha, args.beta),
                         region=args.region)
    print(f"region {args.region}, window k in "
          f"[{rep.window[0]}, {rep.window[1]}]")
    print(f"slope {rep.slope!r}")
    print(f"r_squared {rep.r_squared!r}")
    return 0


def _cmd_verify_mehler(args) -> int:
    thetas = [0.3, 1.0, math.pi / 2, 2.2, 2.9]
    worst = 0.0
    for a in (0.0, 0.5, 1.5):
        for b in (-0.5, 0.0, 0.75):
            params = JacobiParams(a, b)
            for theta in thetas:
                ref = jacobi_r_table(args.kmax, params,
                                     np.array([math.cos(theta)]))[:, 0]
                for k in range(args.kmax + 1):
                    got = mehler_r(k, params, theta).value
                    worst = max(worst,
                                abs(got - ref[k]) / max(1.0, abs(ref[k])))
    worst_lim = 0.0
    for b in (-0.75, -0.9):
        params = JacobiParams(-0.5, b)
        for theta in thetas:
            ref = jacobi_r_table(args.kmax, params,
                                 np.array([math.cos(theta)]))[:, 0]
            for k in range(args.kmax + 1):
                got = mehler_limit_r(k, b, theta).value
                worst_lim = max(worst_lim,
                                abs(got - ref[k]) / max(1.0, abs(ref[k])))
    print(f"max discrepancy, singular form: {float(worst)!r}")
    print(f"max discrepancy, limit form: {float(worst_lim)!r}")
    if max(worst, worst_lim) > args.tol:
        print(f"FAIL: exceeds tolerance {args.tol}")
        return 1
    return 0


def _cmd_laguerre(args) -> int:
    if args.mode == "coeffs":
        f = _parse_laguerre_function(args.function)
        values = laguerre_coefficient_series(f, args.kmax, args.alpha)
        _emit_pairs(range(len(values)), values, "k,value", args.format,
                    args.out, {"alpha": args.alpha, "kmax": args.kmax})
        return 0
    if args.mode == "identity":
        worst = 0.0
        for k in range(1, args.kmax + 1):
            lhs, rhs = step_identity_check(args.a, k, args.alpha)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
        print(f"max identity deviation {worst!r} over k <= {args.kmax}")
        if worst > 1e-10:
            print("FAIL: exceeds tolerance 1e-10")
            return 1
        return 0
    prof = laguerre_bound_profile(args.kmax, args.alpha)
    peak = float(np.max(prof))
    print(f"max over k <= {args.kmax} of sup |e^(-x/2) R_k| = {peak!r}")
    if args.alpha >= 0.0 and peak > 1.0 + 1e-10:
        print("FAIL: exceeds 1 + 1e-10")
        return 1
    return 0


def _cmd_transform(args) -> int:
    params = JacobiParams(args.alpha, args.beta)
    f = _parse_transform_function(args.function, params)
    taus = np.linspace(args.tau_min, args.tau_max, args.tau_count)
    values = transform_sweep(f, taus, params)
    _emit_pairs((repr(float(t)) for t in taus), values, "tau,value",
                args.format, args.out,
                {"alpha": args.alpha, "beta": args.beta,
                 "taus": [float(t) for t in taus]})
    return 0


def _cmd_selftest(args) -> int:
    results = run_all(args.only or None)
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        failed += 0 if r.passed else 1
        print(f"{mark} {r.name} ({r.seconds:.1f}s): {r.detail}")
    total = sum(r.seconds for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed "
          f"in {total:.1f}s")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourierjacobi",
        description="Fourier-Jacobi coefficient decay experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)

    p = sub.add_parser("coeffs", help="coefficient series for a function")
    common(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--function", required=True,
                   help="step:a,b[,...] | power:rho | cospoly:c0,c1,...")
    p.add_argument("--normalization", choices=["hat", "unnormalized"],
                   default="hat")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("decay", help="coefficient series plus a slope fit")
    common(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--function", required=True)
    p.set_defaults(func=_cmd_decay)

    p = sub.add_parser("counterexample",
                       help="power-weight exponent experiment")
    common(p)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--kmax", type=int, default=1024)
    p.add_argument("--tol", type=float, default=0.05)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("opnorm", help="sup-norm growth/decay slope")
    common(p)
    p.add_argument("--region", choices=["full", "right"], default="full")
    p.set_defaults(func=_cmd_opnorm)

    p = sub.add_parser("verify-mehler",
                       help="integral pathway vs recurrence sweep")
    p.add_argument("--kmax", type=int, default=50)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_verify_mehler)

    p = sub.add_parser("laguerre", help="half-line expansion checks")
    p.add_argument("mode", choices=["coeffs", "identity", "bound"])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--kmax", type=int, default=50)
    p.add_argument("--function", default=None,
                   help="step:a | step:a,b[,...] | poly:c0,... | "
                        "damped:rate:c0,...")
    p.add_argument("--a", type=float, default=1.0,
                   help="truncation point for the identity mode")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_laguerre)

    p = sub.add_parser("transform", help="continuous transform over a tau grid")
    common(p)
    p.add_argument("--function", required=True,
                   help="indicator:a,b | expdecay:rate:c0,c1,...")
    p.add_argument("--tau-min", type=float, default=0.0)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--tau-count", type=int, default=101)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("selftest", help="run the acceptance battery")
    p.add_argument("--only", action="append", default=[],
                   help="criterion name; may repeat")
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "laguerre" and args.mode == "coeffs" \
            and not args.function:
        parser.error("laguerre coeffs needs --function")
    try:
        return args.func(args)
    except AccuracyError as exc:
        print(f"accuracy error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
