"""Command-line front end.

Exit statuses:
    0  success (form written, psd, not_sos, identity true)
    1  negative verdict (not_psd, identity false)
    2  usage error
    3  precondition or input failure
    4  inconclusive non-SOS certificate

Polynomial arguments accept a file in the canonical text format, ``-`` for
stdin, or a form id such as ``L:5``, ``C:6``, ``cl44``, ``robinson``,
``lax5``, ``lift:L:5:1``, ``neg:L:5``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .forms import lift, parse_form_id
from .nonsos import (
    SosIdentity,
    certify_not_sos,
    default_weights,
    enumerate_zero_points,
    summands_from_text,
    verify_sos_identity,
)
from .poly import Polynomial
from .psd import check_psd

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_FAILURE = 3
EXIT_INCONCLUSIVE = 4


def psd_equals_sos(n: int, two_d: int) -> bool:
    """Whether every psd (equivalently, every symmetric psd) n-ary 2d-ic is sos."""
    return n == 2 or two_d == 2 or (n, two_d) == (3, 4)


def chart(max_n: int, max_2d: int, unicode: bool = False) -> str:
    if max_n < 2 or max_2d < 2 or max_2d % 2:
        raise ValueError("chart needs max_n >= 2 and an even max_2d >= 2")
    yes, no = ("✓", "×") if unicode else ("Y", "N")
    cols = range(2, max_n + 1)
    lines = ["deg\\var " + " ".join(f"{n:>2}" for n in cols)]
    for two_d in range(2, max_2d + 1, 2):
        cells = " ".join(f"{yes if psd_equals_sos(n, two_d) else no:>2}" for n in cols)
        lines.append(f"{two_d:>7} {cells}")
    return "\n".join(lines) + "\n"


def load_poly(arg: str) -> Polynomial:
    if arg == "-":
        return Polynomial.from_text(sys.stdin.read())
    path = Path(arg)
    if path.is_file():
        return Polynomial.from_text(path.read_text())
    return parse_form_id(arg).build()


def parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(v.strip()) for v in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed point {text!r}") from None


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def cmd_form(args) -> int:
    sys.stdout.write(parse_form_id(args.form).build().to_text())
    return EXIT_OK


def cmd_lift(args) -> int:
    sys.stdout.write(lift(load_poly(args.poly), args.i).to_text())
    return EXIT_OK


def cmd_eval(args) -> int:
    f = load_poly(args.poly)
    point = parse_point(args.point)
    print(_fmt(f.evaluate(point)))
    return EXIT_OK


def cmd_psd(args) -> int:
    cert = check_psd(load_poly(args.poly))
    sys.stdout.write(cert.to_text())
    return EXIT_OK if cert.is_psd else EXIT_NEGATIVE


def cmd_notsos(args) -> int:
    f = load_poly(args.poly)
    if args.weights:
        try:
            weights = [int(w) for w in args.weights.split(",")]
        except ValueError:
            raise ValueError(f"malformed weights {args.weights!r}") from None
    else:
        weights = default_weights(f.n)
    cert = certify_not_sos(f, enumerate_zero_points(f.n, weights), seed=args.seed)
    sys.stdout.write(cert.to_text())
    return EXIT_OK if cert.is_not_sos else EXIT_INCONCLUSIVE


def cmd_verify_sos(args) -> int:
    target = load_poly(args.target)
    summands = summands_from_text(Path(args.summands).read_text())
    ok = verify_sos_identity(SosIdentity(target, summands))
    print(f"identity: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_chart(args) -> int:
    sys.stdout.write(chart(args.max_n, args.max_2d, unicode=args.unicode))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symquartic", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("form", help="expand a named form")
    p.add_argument("form")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("lift", help="multiply by (x_1+...+x_n)^(2i)")
    p.add_argument("poly")
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("eval", help="evaluate exactly at a rational point")
    p.add_argument("poly")
    p.add_argument("point", help="comma-separated rationals, e.g. 1,1/2,0")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("psd", help="decide PSD of a symmetric quartic (n >= 4)")
    p.add_argument("poly")
    p.set_defaults(func=cmd_psd)

    p = sub.add_parser("notsos", help="zero-forcing non-SOS certificate for a quartic")
    p.add_argument("poly")
    p.add_argument("--weights", help="comma-separated numbers of 1's (default m,m+1)")
    p.add_argument("--seed", type=int, default=0, help="seed for the subtraction replay")
    p.set_defaults(func=cmd_notsos)

    p = sub.add_parser("verify-sos", help="check target == sum (g*h)^2 exactly")
    p.add_argument("target")
    p.add_argument("summands", help="file of poly blocks, consecutive pairs (g, h)")
    p.set_defaults(func=cmd_verify_sos)

    p = sub.add_parser("chart", help="print the psd = sos classification chart")
    p.add_argument("max_n", type=int)
    p.add_argument("max_2d", type=int)
    p.add_argument("--unicode", action="store_true", help="use check/cross marks")
    p.set_defaults(func=cmd_chart)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
