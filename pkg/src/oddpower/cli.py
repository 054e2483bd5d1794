"""Command line interface.

Subcommands:
    coeffs <m>            print the solved coefficient row for order m
    poly <y>              print the y-th family polynomial
    diff <y> --var x|z|both   print a partial derivative or their sum
    eval <y> --at <u>     evaluate the derivative sum at (u, u)
    verify [--max-y N]    symbolic identity checks, PASS/FAIL table per y
    oracle <m> [--max-n N]    literal integer summation check of the expansion

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage or
parse error.  Orders above 64 are refused unless --allow-large is given, to
keep accidental runtimes in check.
"""

from __future__ import annotations

import argparse
import sys

from . import engine
from .coefficients import solve_coeffs, verify_identity
from .rationals import Rational
from .rendering import FORMATS, coeff_vector_json, render

MAX_ORDER = 64


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _rational(text: str) -> Rational:
    # Accepts "a/b" or an integer; decimals are refused to preserve exactness.
    try:
        num, sep, den = text.partition("/")
        if sep and not den:
            raise ValueError
        value = Rational(int(num)) if not sep else Rational(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"invalid rational {text!r}, expected an integer or a/b"
        )
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddpower",
        description="Exact polynomial engine for the odd-power derivative identity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="solved coefficient row for order m")
    coeffs.add_argument("m", type=_nonneg_int)
    coeffs.add_argument("--format", choices=("plain", "json"), default="plain")

    poly = sub.add_parser("poly", help="the y-th family polynomial")
    poly.add_argument("y", type=_nonneg_int)
    poly.add_argument("--format", choices=FORMATS, default="plain")

    diff = sub.add_parser("diff", help="partial derivative of the y-th polynomial")
    diff.add_argument("y", type=_nonneg_int)
    diff.add_argument("--var", choices=("x", "z", "both"), required=True)
    diff.add_argument("--format", choices=FORMATS, default="plain")

    evaluate = sub.add_parser("eval", help="derivative sum at the diagonal point (u, u)")
    evaluate.add_argument("y", type=_nonneg_int)
    evaluate.add_argument("--at", type=_rational, required=True, metavar="U")

    verify = sub.add_parser("verify", help="symbolic identity checks for y = 0..N")
    verify.add_argument("--max-y", type=_nonneg_int, default=25)

    oracle = sub.add_parser("oracle", help="literal summation check for order m")
    oracle.add_argument("m", type=_nonneg_int)
    oracle.add_argument("--max-n", type=_positive_int, default=30)

    for command in (coeffs, poly, diff, evaluate, verify, oracle):
        command.add_argument("--allow-large", action="store_true")

    return parser


def _order_of(args: argparse.Namespace) -> int:
    if args.command in ("coeffs", "oracle"):
        return args.m
    if args.command == "verify":
        return args.max_y
    return args.y


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already written its message; fold --help's exit 0 and
        # usage errors' exit 2 into the return value.
        return int(exc.code or 0)

    order = _order_of(args)
    if order > MAX_ORDER and not args.allow_large:
        print(
            f"error: order {order} exceeds the soft limit {MAX_ORDER}; "
            "pass --allow-large to override",
            file=sys.stderr,
        )
        return 2

    if args.command == "coeffs":
        row = solve_coeffs(args.m)
        if args.format == "json":
            print(coeff_vector_json(row))
        else:
            print(" ".join(str(a) for a in row))
        return 0

    if args.command == "poly":
        print(render(engine.build_poly(args.y), args.format))
        return 0

    if args.command == "diff":
        if args.var == "both":
            result = engine.derivative_sum(args.y)
        else:
            result = engine.build_poly(args.y).diff(args.var)
        print(render(result, args.format))
        return 0

    if args.command == "eval":
        value = engine.eval_derivative_at(args.y, args.at)
        closed_form = (2 * args.y + 1) * args.at ** (2 * args.y)
        if value == closed_form:
            print(f"{value} = {closed_form}")
            return 0
        print(f"{value} != {closed_form} MISMATCH")
        return 1

    if args.command == "verify":
        print(" y  diagonal  derivative  overall")
        failed = False
        for y in range(args.max_y + 1):
            diagonal_ok = engine.check_diagonal(y)
            identity_ok = engine.check_derivative_identity(y).holds
            overall = diagonal_ok and identity_ok
            failed = failed or not overall
            print(
                f"{y:>2}  {_status(diagonal_ok):<8}  {_status(identity_ok):<10}  "
                f"{_status(overall)}"
            )
        return 1 if failed else 0

    if args.command == "oracle":
        if verify_identity(args.m, args.max_n):
            print(f"m={args.m}: PASS (n = 1..{args.max_n})")
            return 0
        print(f"m={args.m}: FAIL")
        return 1

    raise AssertionError(f"unhandled command {args.command!r}")


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


if __name__ == "__main__":
    sys.exit(main())
