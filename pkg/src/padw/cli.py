"""Command-line front end: ``padw {eval,growth,cr,legendre,boundary}``.

Exit codes: 0 ok, 2 domain error, 3 parse error, 4 internal error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, report, series
from .core import (
    DEFAULT_PRECISION,
    check_prime,
    digit_sum,
    format_padic,
    from_fraction,
    ord_factorial,
    ord_rational,
    parse_rational,
)
from .errors import (
    DivergentInput,
    DivergentRadius,
    InvalidWitness,
    PadicError,
    ParseError,
    PrimeError,
)

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_INTERNAL = 0, 2, 3, 4
MAX_PRECISION = 4096


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"PARSE_ERROR: {message}\n")


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ParseError(f"bad range {text!r}") from None
    if b < a:
        raise ParseError(f"empty range {text!r}")
    return range(a, b + 1)


def _default_precision() -> int:
    raw = os.environ.get("PADW_DEFAULT_PREC")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"PADW_DEFAULT_PREC is not an integer: {raw!r}") from None


def _first_difference(a, b) -> int | None:
    """Index of the first differing digit (absolute exponent), or None."""
    if a.congruent(b):
        return None
    d = a._add(-b)
    return d.val


def cmd_eval(args) -> int:
    p, A = args.prime, args.prec
    q = parse_rational(args.input)
    if args.func != "W" and args.method != "series":
        raise ParseError(f"--method {args.method} applies only to --func W")
    if q == 0:
        x = from_fraction(q, p)
    else:
        v = int(ord_rational(q, p))
        x = from_fraction(q, p, max(1, A - v))

    if args.func == "exp":
        print(format_padic(series.exp_p(x, A).cap(A)))
    elif args.func == "log":
        print(format_padic(series.log_p(x, A).cap(A)))
    elif args.method == "both":
        ws = series.lambert_w_series(x, A).cap(A)
        wn = series.lambert_w_newton(x, A).cap(A)
        print(f"series {format_padic(ws)}")
        print(f"newton {format_padic(wn)}")
        i = _first_difference(ws, wn)
        print("verdict MATCH" if i is None else f"verdict MISMATCH first_digit {i}")
        return EXIT_OK if i is None else EXIT_INTERNAL
    else:
        f = series.lambert_w_series if args.method == "series" else series.lambert_w_newton
        print(format_padic(f(x, A).cap(A)))
    return EXIT_OK


def cmd_growth(args) -> int:
    rep = analysis.growth_modulus(parse_rational(args.t), args.prime, args.n_scan)
    if args.format == "records":
        print(report.growth_record(rep))
    else:
        print(report.growth_table(rep))
    return EXIT_OK


def cmd_cr(args) -> int:
    rep = analysis.cr_witness_report(args.nu, args.prime, args.k, _int_range(args.alpha))
    if args.format == "records":
        for row in rep.rows:
            print(report.witness_record(row))
    else:
        print(report.witness_table(rep))
    return EXIT_OK


def cmd_legendre(args) -> int:
    ns = _int_range(args.n)
    if ns.start < 1:
        raise ParseError("n must be >= 1")
    print("n s_n ord_fact")
    for n in ns:
        print(f"{n} {digit_sum(n, args.prime)} {ord_factorial(n, args.prime)}")
    return EXIT_OK


def cmd_boundary(args) -> int:
    p = args.prime
    if args.n_max < p:
        raise ParseError(f"--n-max must be at least p = {p}")
    scan = series.boundary_divergence_scan(p, args.n_max)
    print("n ord")
    for n, t in scan:
        print(f"{n} {report.fmt_q(t)}")
    hits = series.boundary_witnesses(p, scan)
    print(f"witnesses {','.join(map(str, hits)) or '-'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padw", description="p-adic Lambert W toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, prec=False):
        sp.add_argument("--prime", type=int, required=True)
        if prec:
            sp.add_argument("--prec", type=int, default=None)

    sp = sub.add_parser("eval", help="evaluate W, exp or log at a rational")
    common(sp, prec=True)
    sp.add_argument("--func", choices=("W", "exp", "log"), default="W")
    sp.add_argument("--input", required=True)
    sp.add_argument("--method", choices=("series", "newton", "both"), default="series")
    sp.set_defaults(run=cmd_eval)

    sp = sub.add_parser("growth", help="growth modulus at radius p^(-t)")
    common(sp)
    sp.add_argument("--t", required=True)
    sp.add_argument("--n-scan", type=int, default=0)
    sp.add_argument("--format", choices=("table", "records"), default="table")
    sp.set_defaults(run=cmd_growth)

    sp = sub.add_parser("cr", help="Christol-Robba witness rows")
    common(sp)
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--alpha", required=True, help="a or a..b")
    sp.add_argument("--format", choices=("table", "records"), default="table")
    sp.set_defaults(run=cmd_cr)

    sp = sub.add_parser("legendre", help="digit sums and ord_p(n!)")
    common(sp)
    sp.add_argument("--n", required=True, help="n or a..b")
    sp.set_defaults(run=cmd_legendre)

    sp = sub.add_parser("boundary", help="W term valuations on |x| = r_p")
    common(sp)
    sp.add_argument("--n-max", type=int, required=True)
    sp.set_defaults(run=cmd_boundary)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        check_prime(args.prime)
        if hasattr(args, "prec"):
            if args.prec is None:
                args.prec = _default_precision()
            if not 1 <= args.prec <= MAX_PRECISION:
                raise ParseError(f"precision must lie in [1, {MAX_PRECISION}]")
        return args.run(args)
    except (ParseError, PrimeError) as exc:
        print(f"PARSE_ERROR: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DivergentRadius as exc:
        print(f"DIVERGENT_RADIUS: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DivergentInput as exc:
        print(f"DIVERGENT_INPUT: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvalidWitness as exc:
        print(f"INVALID_WITNESS: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PadicError as exc:
        print(f"INTERNAL_ERROR: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
