"""Command-line front end: analyze, build, uniformity, dump, svp, verify-paper.

Exit codes: 0 success, 1 failed verification scorecard, 2 usage or
validation errors, 3 domain errors, 4 budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import IO, Sequence

from .builder import BuildRequest, MultiplierRecipe, build, validate
from .empirical import (
    DEFAULT_BUDGET,
    csv_header,
    csv_row,
    dump_sequence,
    format_fraction,
    frequency_test,
)
from .errors import (
    BudgetExceeded,
    DimensionTooLarge,
    EmptyBox,
    ExpressionError,
    FactorizationError,
    InvalidParams,
    LambdaInvalid,
    LcgspecError,
    NoPotential,
    PeriodBroken,
    PeriodViolation,
    PotentialOne,
    TooSmall,
    Unsupported,
)
from .exprparse import parse_endpoint, parse_int_expr
from .lattice import (
    LatticeBasis,
    brute_force_shortest,
    dual_basis,
    shortest_vector,
)
from .lcg import LcgParams, check_max_period
from .spectral import knuth_bound, spectral_test

EXIT_OK = 0
EXIT_SCORECARD = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4

_USAGE_ERRORS = (InvalidParams, ExpressionError, TooSmall, Unsupported)
_DOMAIN_ERRORS = (
    NoPotential,
    PotentialOne,
    PeriodViolation,
    PeriodBroken,
    LambdaInvalid,
    EmptyBox,
)
_BUDGET_ERRORS = (BudgetExceeded, DimensionTooLarge, FactorizationError)

_REGIME_LABEL = {
    "S_EQ_TAU_2": "s = tau = 2",
    "S_EQ_TAU_GE3": "s = tau >= 3",
    "S_LT_TAU": "s < tau",
    "S_GT_TAU": "s > tau",
}


def _json_out(obj, out: IO[str]) -> None:
    # sort_keys + fixed separators keep repeated runs byte-identical
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _parse_s_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise InvalidParams(f"bad dimension range {text!r}; use S or LO..HI")
    if lo_i < 2 or hi_i < lo_i:
        raise InvalidParams(f"need 2 <= LO <= HI, got {text!r}")
    return list(range(lo_i, hi_i + 1))


def _render_table(header: list[str], rows: list[list[str]], out: IO[str]) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    for line in [header] + rows:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() + "\n")


# -- analyze -----------------------------------------------------------------


def _bound_marks(result) -> str:
    marks = []
    tb = result.bounds
    v_sq = Fraction(result.v_sq)
    if tb is not None and tb.lower_sq is not None:
        ok = v_sq >= tb.lower_sq
        tag = "lower~" if tb.lower_unverified else "lower"
        marks.append(tag if ok else f"{tag} VIOLATED")
    if tb is not None and tb.upper_sq is not None:
        marks.append("upper" if v_sq <= tb.upper_sq else "upper VIOLATED")
    try:
        cap = knuth_bound(result.s, result.N)
    except Unsupported:
        cap = None
    if cap is not None:
        ok = result.v <= cap * (1 + 1e-9)
        marks.append("B" if ok else "B VIOLATED")
    return " ".join(marks) if marks else "-"


def cmd_analyze(args, out: IO[str]) -> int:
    a = parse_int_expr(args.a)
    N = parse_int_expr(args.N)
    c = parse_int_expr(args.c)
    x0 = parse_int_expr(args.x0)
    dims = _parse_s_range(args.s)
    if args.require_max_period:
        report = check_max_period(LcgParams(a, c, N, x0))
        if not report.ok:
            raise PeriodViolation("; ".join(report.failures))
    results = [spectral_test(a, N, s, cap=args.enum_cap) for s in dims]

    if args.format == "json":
        _json_out(
            {"a": str(a), "N": str(N), "results": [r.to_json_dict() for r in results]},
            out,
        )
        return EXIT_OK

    def cap_str(r) -> str:
        try:
            return f"{knuth_bound(r.s, r.N):.4f}"
        except Unsupported:
            return "-"

    if args.format == "csv":
        out.write(
            "s,v_sq,lg_v,mu,regime,tau,lambda,theorem,lower_sq,upper_sq,knuth_bound,certified,checks\n"
        )
        for r in results:
            tb = r.bounds
            out.write(
                ",".join(
                    [
                        str(r.s),
                        str(r.v_sq),
                        f"{r.lg_v:.6f}",
                        f"{r.mu:.6f}",
                        r.regime.value if r.regime else "-",
                        str(r.profile.tau) if r.profile else "-",
                        str(r.profile.lam) if r.profile else "-",
                        str(tb.theorem_id) if tb else "-",
                        str(tb.lower_sq) if tb and tb.lower_sq is not None else "-",
                        str(tb.upper_sq) if tb and tb.upper_sq is not None else "-",
                        cap_str(r),
                        "yes" if r.certified else "no",
                        _bound_marks(r).replace(" ", ";"),
                    ]
                )
                + "\n"
            )
        return EXIT_OK

    out.write(f"a = {a}, N = {N}\n")
    if results[0].profile is not None:
        pr = results[0].profile
        out.write(f"tau = {pr.tau}, lambda = {pr.lam}\n")
    else:
        out.write("tau undefined (no potential); theorem bounds omitted\n")
    header = ["s", "v^2", "lg v", "mu", "regime", "thm", "lower^2", "upper^2", "B-bound", "checks"]
    rows = []
    for r in results:
        tb = r.bounds
        rows.append(
            [
                str(r.s),
                str(r.v_sq),
                f"{r.lg_v:.4f}",
                f"{r.mu:.4f}",
                _REGIME_LABEL[r.regime.value] if r.regime else "-",
                str(tb.theorem_id) if tb else "-",
                str(tb.lower_sq) if tb and tb.lower_sq is not None else "-",
                str(tb.upper_sq) if tb and tb.upper_sq is not None else "-",
                cap_str(r),
                _bound_marks(r),
            ]
        )
        if tb is not None and tb.violations:
            rows.append(["", f"(s={r.s}: " + "; ".join(tb.violations) + ")", "", "", "", "", "", "", "", ""])
    _render_table(header, rows, out)
    return EXIT_OK


# -- build -------------------------------------------------------------------


def _parse_primes(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    primes: list[int] = []
    exps: list[int] = []
    for chunk in text.split(","):
        p, sep, r = chunk.partition(":")
        try:
            primes.append(int(p))
            exps.append(int(r) if sep else 1)
        except ValueError:
            raise InvalidParams(f"bad prime factor {chunk!r}; use P or P:R")
    return tuple(primes), tuple(exps)


def cmd_build(args, out: IO[str]) -> int:
    if (args.s is None) == (args.tau is None):
        raise InvalidParams("exactly one of --s (single mode) or --tau (range mode) is required")
    if args.a is not None:
        recipe = MultiplierRecipe(a=parse_int_expr(args.a))
    elif args.primes is not None:
        primes, exps = _parse_primes(args.primes)
        recipe = MultiplierRecipe(d=args.d, primes=primes, exponents=exps)
    else:
        raise InvalidParams("a multiplier is required: --a or --primes [--d]")
    min_acc = None if args.min_accuracy is None else parse_int_expr(args.min_accuracy)
    request = BuildRequest(
        mode="single" if args.s is not None else "range",
        s=args.s,
        tau=args.tau,
        l=args.l,
        lam=getattr(args, "lambda"),
        recipe=recipe,
        min_accuracy=min_acc,
    )
    gen = build(request)
    report = validate(gen, args.validate, cap=args.enum_cap) if args.validate else None

    if args.format == "json":
        payload = gen.to_json_dict()
        if report is not None:
            payload["validation"] = report.to_json_dict()
        _json_out(payload, out)
        return EXIT_OK

    p = gen.params
    out.write(f"X_(n+1) = ({p.a} * X_n + {p.c}) mod {p.N}\n")
    out.write(f"tau = {gen.profile.tau}, lambda = {gen.profile.lam}, "
              f"guaranteed dimensions 2..{gen.covers_s_max}\n")
    if gen.uniform_lower_sq is not None:
        tag = " (unverified)" if gen.uniform_lower_unverified else ""
        out.write(f"uniform lower bound: v_s^2 >= {gen.uniform_lower_sq} "
                  f"for 2 <= s <= {gen.covers_s_max}{tag}\n")
    for entry in gen.certificate():
        out.write("  " + entry["statement"] + "\n")
    if report is not None:
        out.write(f"validation up to s = {args.validate}: "
                  f"{'ok' if report.ok else 'FAILED'}\n")
        for row in report.rows:
            out.write(f"  s={row.s} v^2={row.v_sq} mu={row.mu:.4f}\n")
            for chk in row.checks:
                status = "ok" if chk.passed else ("unverified" if chk.informational else "FAILED")
                out.write(f"    {chk.name}: {status}\n")
        if not report.ok:
            return EXIT_SCORECARD
    return EXIT_OK


# -- uniformity --------------------------------------------------------------


def _parse_interval(text: str) -> tuple[Fraction, Fraction, str, str]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise InvalidParams(f"bad interval {text!r}; use ALPHA:BETA")
    return parse_endpoint(lo), parse_endpoint(hi), lo.strip(), hi.strip()


def cmd_uniformity(args, out: IO[str]) -> int:
    specs = list(args.interval or [])
    if args.intervals_file:
        with open(args.intervals_file, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    specs.append(line)
    if not specs:
        raise InvalidParams("no intervals given; use --interval or --intervals-file")
    params = LcgParams(
        parse_int_expr(args.a), parse_int_expr(args.c),
        parse_int_expr(args.N), parse_int_expr(args.x0),
    )
    reports = []
    for spec in specs:
        alpha, beta, lo_label, hi_label = _parse_interval(spec)
        reports.append(frequency_test(params, alpha, beta, lo_label, hi_label,
                                      budget=args.budget))

    if args.format == "json":
        _json_out({"a": str(params.a), "N": str(params.N),
                   "rows": [r.to_json_dict() for r in reports]}, out)
    elif args.format == "csv":
        out.write(csv_header() + "\n")
        for r in reports:
            out.write(csv_row(r) + "\n")
    else:
        header = ["alpha", "beta", "m", "m/N", "beta-alpha", "delta"]
        rows = [[r.alpha_label or format_fraction(r.alpha),
                 r.beta_label or format_fraction(r.beta),
                 str(r.m), format_fraction(r.frequency),
                 format_fraction(r.width), format_fraction(r.delta)]
                for r in reports]
        _render_table(header, rows, out)
    return EXIT_OK


# -- dump --------------------------------------------------------------------


def cmd_dump(args, out: IO[str]) -> int:
    params = LcgParams(
        parse_int_expr(args.a), parse_int_expr(args.c),
        parse_int_expr(args.N), parse_int_expr(args.x0),
    )
    count = None if args.count is None else parse_int_expr(args.count)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            dump_sequence(params, fh, fmt=args.format, count=count,
                          digits=args.digits, per_line=args.per_line,
                          budget=args.budget)
    else:
        dump_sequence(params, out, fmt=args.format, count=count,
                      digits=args.digits, per_line=args.per_line,
                      budget=args.budget)
    return EXIT_OK


# -- svp ---------------------------------------------------------------------


def cmd_svp(args, out: IO[str]) -> int:
    if args.basis_file:
        with open(args.basis_file, encoding="utf-8") as fh:
            basis = LatticeBasis.from_json_dict(json.load(fh))
        result = shortest_vector(basis, cap=args.enum_cap)
        method = "enumeration"
    else:
        if args.a is None or args.N is None or args.s is None:
            raise InvalidParams("need --basis-file, or --a --N --s")
        a, N, s = parse_int_expr(args.a), parse_int_expr(args.N), args.s
        if args.brute_box is not None:
            result = brute_force_shortest(a, N, s, box=parse_int_expr(args.brute_box))
            method = "brute-force"
        else:
            result = shortest_vector(dual_basis(a, N, s), cap=args.enum_cap)
            method = "enumeration"

    if args.format == "json":
        payload = result.to_json_dict()
        payload["method"] = method
        _json_out(payload, out)
    else:
        out.write(f"norm^2 = {result.norm_sq}\n")
        out.write("vector = (" + ", ".join(str(x) for x in result.vector) + ")\n")
        out.write(f"certified = {'yes' if result.certified else 'no'} ({method})\n")
    return EXIT_OK


# -- verify-paper ------------------------------------------------------------


def cmd_verify_paper(args, out: IO[str]) -> int:
    from . import scorecard

    only = None
    if args.only:
        try:
            only = {int(x) for x in args.only.split(",")}
        except ValueError:
            raise InvalidParams(f"bad --only list {args.only!r}; use e.g. 1,3,7")
    results = scorecard.run_all(only=only)
    if not results:
        raise InvalidParams(f"--only {args.only} matched no criteria")
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        out.write(f"[{tag}] {res.cid:>2}. {res.title} ({res.elapsed:.2f} s)\n")
        if res.detail:
            out.write(f"       {res.detail}\n")
    passed = sum(1 for r in results if r.passed)
    out.write(f"{passed}/{len(results)} checks passed\n")
    return EXIT_OK if passed == len(results) else EXIT_SCORECARD


# -- parser ------------------------------------------------------------------


def _add_generator_args(p: argparse.ArgumentParser, with_c: bool = True) -> None:
    p.add_argument("--a", required=True, help="multiplier (integer expression, e.g. 69069)")
    p.add_argument("--N", required=True, help="modulus (integer expression, e.g. 2^32)")
    if with_c:
        p.add_argument("--c", default="1", help="increment (default 1)")
        p.add_argument("--x0", default="0", help="seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcgspec",
        description="Exact spectral-test analysis and construction of maximum-period "
                    "linear congruential generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectral figures v_s^2, merit and bounds per dimension")
    _add_generator_args(p)
    p.add_argument("--s", default="2", help="dimension or range, e.g. 3 or 2..6")
    p.add_argument("--require-max-period", action="store_true",
                   help="fail (exit 3) unless the generator has maximum period")
    p.add_argument("--enum-cap", type=int, default=None,
                   help="max enumeration dimension (default 12 or LCGSPEC_ENUM_CAP)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("build", help="construct a generator with certified v_s bounds")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--s", type=int, help="single-dimension mode: target dimension")
    mode.add_argument("--tau", type=int, help="range mode: guarantee dimensions 2..tau")
    p.add_argument("--l", type=int, default=0, help="extra exponent in range mode (default 0)")
    p.add_argument("--lambda", type=int, default=1, help="period cofactor (default 1)")
    p.add_argument("--a", default=None, help="explicit multiplier (integer expression)")
    p.add_argument("--d", type=int, default=1, help="cofactor d of a shaped multiplier")
    p.add_argument("--primes", default=None,
                   help="prime kernel of a shaped multiplier, e.g. 2:7 or 2:2,17267")
    p.add_argument("--min-accuracy", default=None,
                   help="require a - b_s to exceed this integer expression")
    p.add_argument("--validate", type=int, default=None, metavar="SMAX",
                   help="run the solver for s = 2..SMAX against the certificate")
    p.add_argument("--enum-cap", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("uniformity", help="exact frequency tests over [alpha, beta] segments")
    _add_generator_args(p)
    p.add_argument("--interval", action="append", metavar="ALPHA:BETA",
                   help="endpoint expressions, e.g. 0.2:0.9 or 1/pi^2:1-1/e (repeatable)")
    p.add_argument("--intervals-file", default=None,
                   help="file with one ALPHA:BETA per line, # comments allowed")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"refuse periods above this (default {DEFAULT_BUDGET})")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_uniformity)

    p = sub.add_parser("dump", help="stream the generated sequence as CSV or a decimal table")
    _add_generator_args(p)
    p.add_argument("--count", default=None, help="how many terms (default: full period)")
    p.add_argument("--digits", type=int, default=None,
                   help="decimal digits for x/N (default: exact if terminating)")
    p.add_argument("--per-line", type=int, default=10, help="table values per row (default 10)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    p.add_argument("--format", choices=["csv", "table"], default="csv")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("svp", help="exact shortest nonzero vector of an integer lattice")
    p.add_argument("--basis-file", default=None,
                   help='JSON file {"rows": [[...], ...]} with integer entries')
    p.add_argument("--a", default=None, help="multiplier for the dual spectral lattice")
    p.add_argument("--N", default=None, help="modulus for the dual spectral lattice")
    p.add_argument("--s", type=int, default=None, help="dimension for the dual spectral lattice")
    p.add_argument("--brute-box", default=None, metavar="B",
                   help="use the coordinate-box oracle with |m_i| <= B instead of enumeration")
    p.add_argument("--enum-cap", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_svp)

    p = sub.add_parser("verify-paper", help="run the acceptance scorecard")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers, e.g. 1,3,7")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: Sequence[str] | None = None, out: IO[str] | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _BUDGET_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
