"""Command-line front end.

Three subcommands: `compute` prints one value (exact targets as num/den
or polynomial JSON, numeric targets at 17 significant digits), `verify`
runs identity suites and reports, `table` emits small CSV tables.

Stream discipline: machine-readable output goes to stdout only, notes and
diagnostics to stderr only.  Exit codes: 0 success (for verify: the run
matched the shipped expected-outcome manifest), 1 evaluation failure or
manifest mismatch, 2 usage error.

The s parameter accepts "a+bi"/"a-bi" complex forms next to plain reals;
x is parsed exactly (p/q, decimal, or integer).  `zmulti` at integer
s <= 0 switches to the exact rational route, since the numeric reduction
has per-term poles there; everything else stays numeric.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    norlund_number,
    norlund_poly,
    umbral_power,
)
from .errors import EvaluationError
from .exactcore import format_rational, stirling1_unsigned, stirling2
from .hurwitz import hurwitz_zeta, multi_hurwitz
from .verify import (
    GridSpec,
    UnknownIdentityError,
    check_against_manifest,
    report_lines,
    reports_to_csv,
    reports_to_json,
    run_suite,
    summarize,
)
from .zetaops import z_multi, z_multi_neg, zhat_sides

TOL_ENV = "MULTIZETA_TOL"

# Rough relative accuracy of each numeric compute route, for the stderr note.
_NUMERIC_TOL_NOTE = {
    "hurwitz": "1e-12",
    "multizeta": "1e-11",
    "zhat": "1e-11",
    "zmulti": "1e-10",
}


def parse_s(text: str) -> complex:
    """Complex in "a+bi" form, or a plain real."""
    cleaned = text.strip().replace(" ", "")
    try:
        if cleaned.endswith(("i", "I")):
            return complex(cleaned[:-1] + "j")
        return complex(cleaned)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as a number") from None


def parse_x(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as a rational") from None


def parse_ms(text: str) -> tuple[int, ...]:
    try:
        ms = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse {text!r} as comma-separated integers"
        ) from None
    if not ms or any(v < 0 for v in ms):
        raise argparse.ArgumentTypeError("derivative orders must be nonnegative")
    return ms


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _fmt_real(v: float) -> str:
    return f"{v:.17g}"


def _print_numeric(value, note_key: str) -> None:
    z = complex(value)
    if z.imag == 0:
        print(_fmt_real(z.real))
    else:
        sign = "+" if z.imag >= 0 else "-"
        print(f"{_fmt_real(z.real)}{sign}{_fmt_real(abs(z.imag))}i")
    print(f"tolerance: ~{_NUMERIC_TOL_NOTE[note_key]} relative", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multizeta",
        description="Hurwitz-type zeta functions of higher order, their "
        "Bernoulli/Stirling reductions, and identity verification suites.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    comp = sub.add_parser("compute", help="print a single value")
    target = comp.add_subparsers(dest="target", required=True)

    p = target.add_parser("bernoulli", help="Bernoulli number B_n")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p = target.add_parser("bernoulli-poly", help="Bernoulli polynomial B_n(x)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p = target.add_parser("norlund", help="higher-order Bernoulli number or polynomial")
    p.add_argument("--n", type=_nonneg_int, required=True, help="degree index")
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--poly", action="store_true", help="emit the polynomial instead")
    p = target.add_parser("stirling1", help="unsigned first-kind Stirling number")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p = target.add_parser("stirling2", help="second-kind Stirling number")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p = target.add_parser("hurwitz", help="Hurwitz zeta(s, x)")
    p.add_argument("--s", type=parse_s, required=True)
    p.add_argument("--x", type=parse_x, required=True)
    p = target.add_parser("multizeta", help="order-n Hurwitz-type zeta")
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--s", type=parse_s, required=True)
    p.add_argument("--x", type=parse_x, required=True)
    p = target.add_parser("zhat", help="G-kernel Mellin zeta")
    p.add_argument("--m", type=_nonneg_int, required=True)
    p.add_argument("--s", type=parse_s, required=True)
    p.add_argument("--x", type=parse_x, required=True)
    p = target.add_parser("zmulti", help="product-kernel Mellin zeta")
    p.add_argument("--ms", type=parse_ms, required=True, help="orders, e.g. 1,0,2")
    p.add_argument("--s", type=parse_s, required=True)
    p.add_argument("--x", type=parse_x, required=True)
    p = target.add_parser("umbral", help="umbral Bernoulli-sum power")
    p.add_argument("--ms", type=parse_ms, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--x", type=parse_x, default=None)

    ver = sub.add_parser("verify", help="run identity suites")
    which = ver.add_mutually_exclusive_group(required=True)
    which.add_argument("--identity", nargs="+", metavar="ID")
    which.add_argument("--all", action="store_true")
    ver.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    ver.add_argument("--out", metavar="PATH")
    ver.add_argument("--tol", type=float, default=None, help="tolerance override")
    ver.add_argument(
        "--figures-dir",
        metavar="DIR",
        help="also render report figures (PNG) into this directory",
    )

    tab = sub.add_parser("table", help="emit a CSV table")
    tab.add_argument(
        "--kind",
        required=True,
        choices=("stirling1", "stirling2", "bernoulli", "norlund"),
    )
    tab.add_argument("--max-n", type=int, required=True, dest="max_n")
    tab.add_argument("--order", type=_nonneg_int, default=1, help="norlund order")
    return parser


def _run_compute(args) -> int:
    t = args.target
    if t == "bernoulli":
        print(format_rational(bernoulli_number(args.n)))
    elif t == "bernoulli-poly":
        print(json.dumps(bernoulli_poly(args.n).to_json()))
    elif t == "norlund":
        if args.poly:
            print(json.dumps(norlund_poly(args.n, args.order).to_json()))
        else:
            print(format_rational(norlund_number(args.n, args.order)))
    elif t == "stirling1":
        print(stirling1_unsigned(args.n, args.k))
    elif t == "stirling2":
        print(stirling2(args.n, args.k))
    elif t == "hurwitz":
        _print_numeric(hurwitz_zeta(args.s, float(args.x)), "hurwitz")
    elif t == "multizeta":
        _print_numeric(multi_hurwitz(args.order, args.s, float(args.x)), "multizeta")
    elif t == "zhat":
        value = zhat_sides(args.m, args.s, float(args.x), variant="corrected")[1]
        _print_numeric(value, "zhat")
    elif t == "zmulti":
        s = args.s
        if s.imag == 0 and s.real == int(s.real) and s.real <= 0:
            print(format_rational(z_multi_neg(args.ms, int(-s.real), args.x)))
        else:
            _print_numeric(z_multi(args.ms, s, float(args.x)), "zmulti")
    elif t == "umbral":
        poly = umbral_power(args.ms, args.n)
        if args.x is None:
            print(json.dumps(poly.to_json()))
        else:
            print(format_rational(poly(args.x)))
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(t)
    return 0


def _run_verify(args) -> int:
    tol = args.tol
    if tol is None and os.environ.get(TOL_ENV):
        try:
            tol = float(os.environ[TOL_ENV])
        except ValueError:
            print(f"ignoring non-numeric {TOL_ENV}", file=sys.stderr)
    grid = GridSpec(tol=tol) if tol is not None else None
    idents = None if args.all else list(args.identity)
    reports = run_suite(idents, grid=grid)
    summary = summarize(reports)

    if args.format == "plain":
        payload = "\n".join(report_lines(reports) + [summary]) + "\n"
    elif args.format == "json":
        payload = reports_to_json(reports) + "\n"
    else:
        payload = reports_to_csv(reports)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        print(summary)
    elif args.format == "plain":
        sys.stdout.write(payload)
    else:
        sys.stdout.write(payload)
        print(summary, file=sys.stderr)

    if args.figures_dir:
        from .figures import render_figures

        for path in render_figures(reports, args.figures_dir):
            print(f"wrote {path}", file=sys.stderr)

    ok, problems = check_against_manifest(reports)
    for problem in problems:
        print(f"manifest mismatch: {problem}", file=sys.stderr)
    return 0 if ok else 1


def _run_table(args) -> int:
    import csv as _csv

    if args.max_n < 0:
        print("--max-n must be nonnegative", file=sys.stderr)
        return 2
    writer = _csv.writer(sys.stdout, lineterminator="\n")
    if args.kind in ("stirling1", "stirling2"):
        fn = stirling1_unsigned if args.kind == "stirling1" else stirling2
        writer.writerow(["n"] + [str(k) for k in range(args.max_n + 1)])
        for n in range(args.max_n + 1):
            cells = [str(fn(n, k)) for k in range(n + 1)]
            writer.writerow([str(n)] + cells + [""] * (args.max_n - n))
    elif args.kind == "bernoulli":
        writer.writerow([str(k) for k in range(args.max_n + 1)])
        writer.writerow(
            [format_rational(bernoulli_number(k)) for k in range(args.max_n + 1)]
        )
    else:
        writer.writerow([str(k) for k in range(args.max_n + 1)])
        writer.writerow(
            [format_rational(norlund_number(k, args.order)) for k in range(args.max_n + 1)]
        )
    return 0


def entry(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.subcommand == "compute":
            return _run_compute(args)
        if args.subcommand == "verify":
            return _run_verify(args)
        return _run_table(args)
    except UnknownIdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EvaluationError as exc:
        print(f"{exc.signal}: {exc}", file=sys.stderr)
        return 1


def main() -> None:  # console-script hook
    sys.exit(entry())


if __name__ == "__main__":
    main()
