"""Command-line entry point: `lbound <subcommand> ...`.

Subcommands
    bound             theorem reports over (σ, t) grids
    verify-constants  region maximisation for the extremal-function constants
    explicit-formula  identity residuals for log|L(σ+it)| from a zero table
    fourier           tabulate f_σ, g_Δ, m_Δ or their transforms
    compare           one-line verdict: identity residual inside the L-interval?

Reports go to stdout (or --output) as JSON, or CSV with --format csv.  Any
report whose preconditions fail makes the exit status 2 unless --allow-invalid
is given.  LBOUND_THREADS caps the number of worker threads for grid runs.
"""
import argparse
from concurrent.futures import ThreadPoolExecutor
import itertools
import os
import sys

import numpy as np

from . import bounds, constants, explicit, extremal
from .errors import LboundError
from .io import dumps, load_descriptor, load_zeros, write_csv


def _floats(text):
    """'0.6,0.75' or 'start:stop:count' (inclusive linspace)."""
    if ":" in text:
        a, b, n = text.split(":")
        return [float(v) for v in np.linspace(float(a), float(b), int(n))]
    return [float(v) for v in text.split(",") if v.strip()]


def _envelopes(items):
    out = {}
    for item in items or ():
        k, _, v = item.partition("=")
        if not _:
            raise argparse.ArgumentTypeError(f"--envelope expects label=value, got {item!r}")
        out[k] = float(v)
    return out or None


def _threads():
    try:
        return max(1, int(os.environ.get("LBOUND_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items):
    n = _threads()
    if n == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _emit(args, payload, rows):
    fh = open(args.output, "w", encoding="utf-8", newline="") if args.output else sys.stdout
    try:
        if args.format == "csv":
            write_csv(rows, fh)
        else:
            fh.write(dumps(payload) + "\n")
    finally:
        if args.output:
            fh.close()


def _add_output(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", help="write here instead of stdout")


# ---------------------------------------------------------------------------


def _bound_one(args, desc, sigma, t):
    ec = _envelopes(args.envelope)
    th = args.theorem
    if th == "7":
        return bounds.theorem7_upper(desc, sigma, t, alpha=args.alpha, loglogtau=args.loglogtau, case=args.case)
    if th == "8":
        return bounds.theorem8_lower(desc, sigma, t, alpha=args.alpha, loglogtau=args.loglogtau, case=args.case,
                                     as_printed=args.as_printed)
    if th in ("cor-upper", "cor-lower"):
        return bounds.corollary_combined(desc, sigma, t, th[4:], loglogtau=args.loglogtau,
                                         alpha=args.alpha if args.alpha is not None else 1.0)
    variant = {"1": "main1_upper", "2": "main1_lower", "3": "conj_upper", "4": "conj_lower",
               "5": "poly_upper", "6": "poly_lower"}[th]
    profile = None
    if variant.startswith("conj"):
        from .lfunc import ConjectureProfile

        profile = ConjectureProfile(mode=args.profile)
    return bounds.theorems_1_to_6(desc, sigma, t, variant, profile=profile, eps=args.eps,
                                  alpha=args.alpha if args.alpha is not None else 1.0,
                                  loglogtau=args.loglogtau, envelope_constants=ec)


def cmd_bound(args):
    desc = load_descriptor(args.descriptor or args.builtin)
    grid = list(itertools.product(_floats(args.sigma), _floats(args.t)))
    reports = _map(lambda st: _bound_one(args, desc, *st), grid)
    rows = [
        {"sigma": st[0], "t": st[1], "theorem": r.theorem_id, "case": r.case, "valid": r.valid,
         "main_term": r.main_term, "total_exact": r.total_exact, "envelopes_total": r.envelopes_total,
         "total": r.total}
        for st, r in zip(grid, reports)
    ]
    payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
    _emit(args, payload, rows)
    invalid = [r for r in reports if not r.valid]
    if invalid and not args.allow_invalid:
        print(f"{len(invalid)} report(s) fail their preconditions (use --allow-invalid)", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args):
    names = sorted(constants.LEMMAS) if args.lemma == "all" else [args.lemma]
    reports = [constants.verify_constant(n) for n in names]
    rows = [{"lemma": r.lemma, "constant": r.constant, "pass": r.passed, "within_1pct": r.within_1pct,
             "worst_region_total": max(g.total for g in r.regions)}
            for r in reports]
    _emit(args, [r.to_dict() for r in reports], rows)
    return 0 if all(r.passed for r in reports) else 1


def _identity_rows(args):
    desc = load_descriptor(args.descriptor or args.builtin)
    zeros = load_zeros(args.zeros)
    grid = list(itertools.product(_floats(args.sigma), _floats(args.t)))
    return _map(lambda st: explicit.log_modulus_identity(desc, st[0], st[1], zeros), grid)


def cmd_explicit(args):
    reps = _identity_rows(args)
    rows = [{"sigma": r.sigma, "t": r.t, "lhs": r.lhs, "main": r.main, "zero_sum_half": r.zero_sum_half,
             "zero_trunc_half": r.zero_trunc_half, "log_L_5_2": r.log_L_5_2, "residual": r.residual,
             "L_down": r.interval.L_down, "L_up": r.interval.L_up, "within": r.within} for r in reps]
    _emit(args, [r.to_dict() for r in reps], rows)
    return 0 if all(r.within for r in reps) else 1


def cmd_compare(args):
    reps = _identity_rows(args)
    out = []
    for r in reps:
        lo = r.interval.L_down - r.zero_trunc_half
        hi = r.interval.L_up + r.zero_trunc_half
        out.append({"sigma": r.sigma, "t": r.t, "residual": r.residual, "lower": lo, "upper": hi,
                    "verdict": "inside" if r.within else "outside"})
    _emit(args, out if len(out) > 1 else out[0], out)
    return 0 if all(r.within for r in reps) else 1


def cmd_fourier(args):
    rows = []
    for sigma, Delta in itertools.product(_floats(args.sigma), _floats(args.Delta)):
        ctx = extremal.ExtremalContext(sigma, Delta)
        for x in _floats(args.x):
            if args.transform:
                rows.append({"sigma": sigma, "Delta": Delta, "xi": x,
                             "ghat": extremal.ghat(ctx, x).value, "mhat": extremal.mhat(ctx, x).value})
            else:
                rows.append({"sigma": sigma, "Delta": Delta, "x": x, "f": extremal.f_sigma(ctx, x),
                             "g": extremal.g_delta(ctx, x).value, "m": extremal.m_delta(ctx, x).value})
    _emit(args, rows, rows)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="lbound", description="Explicit bounds for log|L(σ+it)| under GRH.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_desc(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--builtin", default="zeta", help='"zeta" or "dirichlet:q:k"')
        g.add_argument("--descriptor", help="JSON descriptor file")

    p = sub.add_parser("bound", help="theorem reports over a grid")
    with_desc(p)
    p.add_argument("--theorem", required=True, choices=("1", "2", "3", "4", "5", "6", "7", "8", "cor-upper", "cor-lower"))
    p.add_argument("--sigma", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--loglogtau", type=float, help="synthetic loglog τ (overrides τ(t))")
    p.add_argument("--alpha", type=float)
    p.add_argument("--case", choices=("a", "b", "c"))
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--profile", choices=("CONJ1", "CONJ2"), default="CONJ2")
    p.add_argument("--envelope", action="append", metavar="LABEL=VALUE", help="envelope constant ('*' for all)")
    p.add_argument("--as-printed", action="store_true", help="theorem 8 with the literal display signs")
    p.add_argument("--allow-invalid", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify-constants", help="re-derive the extremal-function constants")
    p.add_argument("--lemma", default="all", choices=["all"] + sorted(constants.LEMMAS))
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    for name, fn, hlp in (("explicit-formula", cmd_explicit, "identity residuals"),
                          ("compare", cmd_compare, "residual-in-interval verdict")):
        p = sub.add_parser(name, help=hlp)
        with_desc(p)
        p.add_argument("--zeros", required=True)
        p.add_argument("--sigma", default="0.75")
        p.add_argument("--t", required=True)
        _add_output(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("fourier", help="tabulate the extremal functions")
    p.add_argument("--sigma", required=True)
    p.add_argument("--Delta", required=True)
    p.add_argument("--x", required=True, help="points (or ξ with --transform)")
    p.add_argument("--transform", action="store_true", help="tabulate ĝ, m̂ instead")
    _add_output(p)
    p.set_defaults(func=cmd_fourier)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
