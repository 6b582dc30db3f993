"""Command-line front end: build approximations, compare methods, check bounds.

Exit codes: 0 success, 1 usage/IO error, 2 method breakdown
(NotPositiveDefinite / ProjectionFailure), 3 a bound check failed.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import errors as err
from .approx import (
    CosineSumApprox,
    GaussianTarget,
    approx_to_json,
    approximate,
    frequencies,
    solve_coefficients,
)
from .hermite import HermiteRule, hermite_rule, read_rule_cache, write_rule_cache
from .linalg import DEFAULT_CUTOFF, NotPositiveDefinite
from .pencil import ProjectionFailure, pencil_frequencies
from .prony import prony_approximate

RULE_CACHE_ENV = "GAUSSKERN_RULE_CACHE"
METHODS = ("hermite", "pencil", "pencil_truncated", "prony")


class _RuleStore:
    """Hermite rules, optionally persisted via $GAUSSKERN_RULE_CACHE."""

    def __init__(self):
        self.path = os.environ.get(RULE_CACHE_ENV)
        self.rules: dict[int, HermiteRule] = {}
        self.dirty = False
        if self.path and os.path.exists(self.path):
            self.rules = read_rule_cache(self.path)

    def get(self, N: int) -> HermiteRule:
        if N not in self.rules:
            self.rules[N] = hermite_rule(N)
            self.dirty = True
        return self.rules[N]

    def flush(self):
        if self.path and self.dirty:
            write_rule_cache(self.path, [self.rules[n] for n in sorted(self.rules)])


def _project_real(freqs: np.ndarray, coeffs: np.ndarray,
                  target: GaussianTarget) -> CosineSumApprox:
    """Gate complex pencil/Prony output into the real cosine-sum type."""
    lam = np.asarray(freqs, dtype=complex)
    gam = np.asarray(coeffs, dtype=complex)
    scale = np.maximum(np.abs(lam), 1e-300)
    if np.any(np.abs(lam.real) > 1e-6 * scale):
        raise ProjectionFailure("frequency strayed off the imaginary axis")
    gscale = np.maximum(np.abs(gam), 1e-300)
    if np.any(np.abs(gam.imag) > 1e-6 * gscale):
        raise ProjectionFailure("coefficient has a non-negligible imaginary part")
    order = np.argsort(lam.imag)
    mu = lam.imag[order]
    ga = gam.real[order]
    mu = 0.5 * (mu - mu[::-1])
    ga = 0.5 * (ga + ga[::-1])
    return CosineSumApprox(target, mu, ga)


class _ExpSum:
    """Callable sum gamma_j e^{lambda_j t} with complex parameters."""

    def __init__(self, lam, gam):
        self.lam = np.asarray(lam, dtype=complex)
        self.gam = np.asarray(gam, dtype=complex)

    def __call__(self, t):
        return np.sum(self.gam * np.exp(self.lam * t))


def _build(method: str, target: GaussianTarget, N: int, store: _RuleStore,
           cutoff: float, trunc_T: float | None, prony_L: int | None):
    """Returns (callable approximant, weighted_error); Prony output stays complex."""
    if method == "hermite":
        approx = approximate(target, N, store.get(N))
        return approx, err.closed_form_error(target, approx)
    if method in ("pencil", "pencil_truncated"):
        T = trunc_T if method == "pencil_truncated" else None
        freqs = pencil_frequencies(target, N, cutoff, T=T, allow_large_N=True)
        coeffs = solve_coefficients(target, freqs)
        approx = CosineSumApprox(target, freqs, coeffs)
        return approx, err.closed_form_error(target, approx)
    if method == "prony":
        lam, gam = prony_approximate(target.sigma, N, prony_L, cutoff)
        werr = err.weighted_error_exponential_sum(target, lam, gam)
        return _ExpSum(lam, gam), werr
    raise ValueError(f"unknown method {method!r}")


def cmd_approx(args) -> int:
    target = GaussianTarget(args.sigma, args.rho)
    store = _RuleStore()
    ns = _n_range(args)
    multi = len(ns) > 1
    if multi and args.out and not os.path.isdir(args.out):
        os.makedirs(args.out, exist_ok=True)
    for N in ns:
        try:
            approx, _ = _build(args.method, target, N, store,
                               args.svd_cutoff, args.truncation_T,
                               args.prony_L)
            if args.method == "prony":
                # serialization needs the real cosine-sum form
                approx = _project_real(approx.lam, approx.gam, target)
        except (NotPositiveDefinite, ProjectionFailure) as exc:
            print(f"method breakdown at N={N}: {exc}", file=sys.stderr)
            store.flush()
            return 2
        text = approx_to_json(approx)
        if args.out is None:
            print(text)
        else:
            path = (os.path.join(args.out, f"approx_N{N}.json")
                    if multi else args.out)
            with open(path, "w") as fh:
                fh.write(text + "\n")
    store.flush()
    return 0


def cmd_error_table(args) -> int:
    target = GaussianTarget(args.sigma, args.rho)
    store = _RuleStore()
    ns = _n_range(args)
    methods = args.method.split(",")
    for m in methods:
        if m not in METHODS:
            print(f"unknown method {m!r}", file=sys.stderr)
            return 1
    rows = []
    for method in methods:
        for N in ns:
            try:
                approx, werr = _build(method, target, N, store,
                                      args.svd_cutoff, args.truncation_T,
                                      args.prony_L)
            except (NotPositiveDefinite, ProjectionFailure) as exc:
                print(f"method breakdown at N={N}: {exc}", file=sys.stderr)
                store.flush()
                return 2
            rule = store.get(N)
            report = err.ErrorReport(
                sigma=target.sigma, rho=target.rho, N=N, method=method,
                weighted_error=werr,
                oracle_error=err.oracle_error(target, approx),
                bound=err.thm31_bound(target.r, N),
                MN=err.MN_diagnostic(rule)[0],
            )
            if method == "hermite" and abs(target.r - 0.5) < 1e-12:
                report.truncT, report.trunc_error = err.truncated_L2_error(
                    target, approx
                )
            rows.append(report)
    store.flush()
    if args.format == "csv":
        lines = [err.CSV_HEADER] + [err.report_row(r) for r in rows]
        text = "\n".join(lines) + "\n"
    else:
        import json

        def fmt(x):
            return None if x is None else format(x, ".17g")

        text = json.dumps([
            {
                "sigma": fmt(r.sigma), "rho": fmt(r.rho), "N": r.N,
                "method": r.method,
                "weighted_error": fmt(r.weighted_error),
                "oracle_error": fmt(r.oracle_error),
                "bound": fmt(r.bound), "truncT": fmt(r.truncT),
                "trunc_error": fmt(r.trunc_error), "MN": fmt(r.MN),
            }
            for r in rows
        ], indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


R_DECAY_LIMIT = 2.0 + math.sqrt(6.0)


def _check_decay(target, store, n_max, out):
    r = target.r
    if r >= R_DECAY_LIMIT:
        out.append(f"N/A  decay: r={r:.6g} >= 2+sqrt(6), no decay predicted")
        return True
    c = err.closed_form_error(target, approximate(target, 2, store.get(2))) \
        / err.thm31_bound(r, 2)
    ok = True
    worst = 0.0
    for N in range(3, min(n_max, 12) + 1):
        e = err.closed_form_error(target, approximate(target, N, store.get(N)))
        ratio = e / (c * err.thm31_bound(r, N))
        worst = max(worst, ratio)
        ok = ok and ratio <= 1.0
    out.append(f"{'PASS' if ok else 'FAIL'} decay: max error/bound ratio "
               f"{worst:.6g} (c fitted at N=2)")
    return ok


def _check_trunc(target, store, n_max, out):
    if abs(target.r - 0.5) > 1e-12:
        out.append("N/A  trunc: requires rho = sigma/2")
        return True
    _, e4 = err.truncated_L2_error(target, approximate(target, 4, store.get(4)))
    c = e4 ** 2 / (2.0 ** -8 * 4 ** 1.5)
    ok = True
    worst = 0.0
    for N in range(5, min(n_max, 12) + 1):
        _, e = err.truncated_L2_error(target, approximate(target, N, store.get(N)))
        ratio = e ** 2 / (c * 2.0 ** (-2 * N) * N ** 1.5)
        worst = max(worst, ratio)
        ok = ok and ratio <= 1.0
    out.append(f"{'PASS' if ok else 'FAIL'} trunc: max error^2/bound ratio "
               f"{worst:.6g} (c fitted at N=4)")
    return ok


def _check_mn(target, store, n_max, out, table=False):
    base = err.MN_diagnostic(store.get(5))[1]
    ok = True
    worst = 0.0
    for N in range(5, max(n_max, 6) + 1):
        MN, ratio = err.MN_diagnostic(store.get(N))
        if table:
            out.append(f"  N={N:3d}  M_N={MN:.17g}  M_N/N^1.5={ratio:.17g}")
        worst = max(worst, ratio / base)
        ok = ok and ratio <= 1.2 * base
    out.append(f"{'PASS' if ok else 'FAIL'} mn: max (M_N/N^1.5)/(value at N=5) "
               f"= {worst:.6g} (limit 1.2)")
    return ok


def _check_lemma31(target, store, n_max, out):
    ok = True
    worst = 0.0
    for N in range(1, min(n_max, 12) + 1):
        rule = store.get(N)
        for k in range(N):
            lhs, rhs = err.lemma31_bound_check(target, rule, k)
            worst = max(worst, lhs / rhs)
            ok = ok and lhs < rhs
    out.append(f"{'PASS' if ok else 'FAIL'} lemma31: max lhs/rhs = {worst:.6g}")
    return ok


def cmd_bound_check(args) -> int:
    target = GaussianTarget(args.sigma, args.rho)
    store = _RuleStore()
    out: list[str] = []
    ok = True
    checks = ("decay", "trunc", "mn", "lemma31") if args.check == "all" \
        else (args.check,)
    for check in checks:
        if check == "decay":
            ok &= _check_decay(target, store, args.n_max, out)
        elif check == "trunc":
            ok &= _check_trunc(target, store, args.n_max, out)
        elif check == "mn":
            ok &= _check_mn(target, store, args.n_max, out,
                            table=(args.check == "mn"))
        elif check == "lemma31":
            ok &= _check_lemma31(target, store, args.n_max, out)
    store.flush()
    print("\n".join(out))
    return 0 if ok else 3


def _n_range(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.n_min is None or args.n_max is None or args.n_min > args.n_max:
        raise SystemExit(_usage_error("empty or invalid N range"))
    return list(range(args.n_min, args.n_max + 1))


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 1


def _add_common(p):
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--truncation-T", type=float, default=None)
    p.add_argument("--prony-L", type=int, default=None)
    p.add_argument("--svd-cutoff", type=float, default=DEFAULT_CUTOFF)
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausskern",
        description="Cosine-sum approximation of e^{-t^2/2 sigma}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="build approximations, one JSON per N")
    _add_common(p)
    p.add_argument("--method", choices=METHODS, default="hermite")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("error-table", help="error CSV across an N range")
    _add_common(p)
    p.add_argument("--method", default="hermite",
                   help="comma-separated subset of " + ",".join(METHODS))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_error_table)

    p = sub.add_parser("bound-check", help="run the theoretical-bound suite")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--rho", type=float, default=0.5)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--check", default="all",
                   choices=("all", "decay", "trunc", "mn", "lemma31"))
    p.set_defaults(func=cmd_bound_check)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract reserves 2 for
        # method breakdown, so usage problems map to 1
        return 0 if exc.code in (0, None) else 1
    if "pencil_truncated" in (getattr(args, "method", "") or "") \
            and args.truncation_T is None:
        return _usage_error("--truncation-T is required with pencil_truncated")
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except OSError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
