"""Command-line front end.

Subcommands: `eval` for a single integral, `table` for a value grid
with dashes at divergent cells, `verify` for a closed-form vs
quadrature sweep.  Exit status: 0 success, 1 usage error, 2 divergent
at zero, 3 divergent at infinity, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .closedform import (
    ConvergenceClass,
    SymValue,
    classify,
    evaluate,
    sym_to_decimal,
)
from .oracle import ToleranceError, integrate_sinpow

__all__ = ["main", "render_exact", "render_latex", "render_json"]

_FORMATS = ("exact", "decimal", "latex", "json")


def render_exact(value: SymValue) -> str:
    """ASCII rendering: `1/2*pi`, `15/16*ln(3) - 5/16*ln(5)`, `0`."""
    parts: list[tuple[Fraction, str]] = []
    if value.pi_coeff != 0:
        parts.append((value.pi_coeff, "pi"))
    parts.extend((coeff, "ln(%d)" % arg) for coeff, arg in value.log_terms)
    if not parts:
        return "0"
    pieces = []
    for i, (coeff, symbol) in enumerate(parts):
        mag = abs(coeff)
        if mag == 1:
            body = symbol
        elif mag.denominator == 1:
            body = "%d*%s" % (mag.numerator, symbol)
        else:
            body = "%d/%d*%s" % (mag.numerator, mag.denominator, symbol)
        if i == 0:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


def _latex_pi(coeff: Fraction) -> str:
    num, den = abs(coeff).numerator, abs(coeff).denominator
    if den == 1:
        return r"\pi" if num == 1 else r"%d\pi" % num
    if num == 1:
        return r"\frac{\pi}{%d}" % den
    return r"\frac{%d\pi}{%d}" % (num, den)


def _latex_log(coeff: Fraction, arg: int) -> str:
    num, den = abs(coeff).numerator, abs(coeff).denominator
    if den == 1:
        return r"\ln %d" % arg if num == 1 else r"%d\ln %d" % (num, arg)
    return r"\frac{%d}{%d}\ln %d" % (num, den, arg)


def render_latex(value: SymValue) -> str:
    """LaTeX rendering in fraction style, e.g. `\\frac{3\\pi}{8}`."""
    parts: list[tuple[Fraction, str]] = []
    if value.pi_coeff != 0:
        parts.append((value.pi_coeff, _latex_pi(value.pi_coeff)))
    parts.extend(
        (coeff, _latex_log(coeff, arg)) for coeff, arg in value.log_terms
    )
    if not parts:
        return "0"
    pieces = []
    for i, (coeff, body) in enumerate(parts):
        if i == 0:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


def render_json(
    p: int,
    q: int,
    value: SymValue | None,
    convergence: ConvergenceClass,
    digits: int,
) -> str:
    """One-line JSON with string numerators immune to integer limits."""
    convergent = convergence is ConvergenceClass.CONVERGENT
    if convergent:
        assert value is not None
        pi_coeff = value.pi_coeff
        log_terms = value.log_terms
        decimal = sym_to_decimal(value, digits)
    else:
        pi_coeff = Fraction(0)
        log_terms = ()
        decimal = None
    obj = {
        "p": p,
        "q": q,
        "convergent": convergent,
        "pi_coeff": {"num": str(pi_coeff.numerator), "den": str(pi_coeff.denominator)},
        "log_terms": [
            {"num": str(c.numerator), "den": str(c.denominator), "arg": arg}
            for c, arg in log_terms
        ],
        "decimal": decimal,
        "divergence": None if convergent else convergence.value,
    }
    return json.dumps(obj)


def _render_cell(p: int, q: int, fmt: str, digits: int) -> str:
    convergence = classify(p, q)
    if fmt == "json":
        value = evaluate(p, q) if convergence is ConvergenceClass.CONVERGENT else None
        return render_json(p, q, value, convergence, digits)
    if convergence is not ConvergenceClass.CONVERGENT:
        return "-"
    value = evaluate(p, q)
    if fmt == "exact":
        return render_exact(value)
    if fmt == "latex":
        return render_latex(value)
    return sym_to_decimal(value, digits)


_DIVERGENCE_DIAGNOSTIC = {
    ConvergenceClass.DIVERGENT_AT_ZERO: ("diverges at zero (q > p)", 2),
    ConvergenceClass.DIVERGENT_AT_INFINITY: ("diverges at infinity (q=1, p even)", 3),
}


def _cmd_eval(args: argparse.Namespace) -> int:
    convergence = classify(args.p, args.q)
    if convergence is not ConvergenceClass.CONVERGENT:
        if args.format == "json":
            print(render_json(args.p, args.q, None, convergence, args.digits))
        diagnostic, status = _DIVERGENCE_DIAGNOSTIC[convergence]
        print(diagnostic, file=sys.stderr)
        return status
    value = evaluate(args.p, args.q)
    if args.format == "json":
        print(render_json(args.p, args.q, value, convergence, args.digits))
    elif args.format == "exact":
        print(render_exact(value))
    elif args.format == "latex":
        print(render_latex(value))
    else:
        print(sym_to_decimal(value, args.digits))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.format == "json":
        cells = [
            json.loads(_render_cell(p, q, "json", args.digits))
            for q in range(1, args.qmax + 1)
            for p in range(1, args.pmax + 1)
        ]
        print(json.dumps(cells))
        return 0
    grid = [
        [_render_cell(p, q, args.format, args.digits) for p in range(1, args.pmax + 1)]
        for q in range(1, args.qmax + 1)
    ]
    headers = ["p=%d" % p for p in range(1, args.pmax + 1)]
    labels = ["q=%d" % q for q in range(1, args.qmax + 1)]
    widths = [
        max(len(headers[i]), max(len(row[i]) for row in grid))
        for i in range(args.pmax)
    ]
    label_w = max(len(s) for s in labels)
    print("  ".join([" " * label_w] + [h.ljust(w) for h, w in zip(headers, widths)]).rstrip())
    for label, row in zip(labels, grid):
        print("  ".join([label.ljust(label_w)] + [c.ljust(w) for c, w in zip(row, widths)]).rstrip())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    checked = 0
    for q in range(1, args.qmax + 1):
        for p in range(1, args.pmax + 1):
            if classify(p, q) is not ConvergenceClass.CONVERGENT:
                continue
            checked += 1
            truth = float(sym_to_decimal(evaluate(p, q), 20))
            try:
                result = integrate_sinpow(p, q, args.tol)
            except ToleranceError as exc:
                print("I(%d,%d): FAIL (%s)" % (p, q, exc))
                failures += 1
                continue
            diff = abs(result.estimate - truth)
            ok = diff <= args.tol and diff <= result.error_bound
            print(
                "I(%d,%d): diff=%.3e bound=%.3e %s"
                % (p, q, diff, result.error_bound, "PASS" if ok else "FAIL")
            )
            if not ok:
                failures += 1
    print("verified %d cells: %d pass, %d fail" % (checked, checked - failures, failures))
    return 0 if failures == 0 else 4


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit status 2 on usage errors; we reserve 2
    for divergence at zero, so usage errors exit 1 instead."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %s" % text)
    return value


def _bounded_int(lo: int, hi: int):
    def convert(text: str) -> int:
        value = _positive_int(text)
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(
                "expected an integer in %d..%d, got %s" % (lo, hi, text)
            )
        return value

    return convert


def _tolerance(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a number, got %r" % text)
    if not value >= 1e-10:
        raise argparse.ArgumentTypeError("tolerance must be >= 1e-10, got %s" % text)
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sincpow",
        description="Exact values of the half-line integrals of sin^p(t)/t^q.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate a single integral")
    p_eval.add_argument("p", type=_positive_int)
    p_eval.add_argument("q", type=_positive_int)
    p_eval.add_argument("--format", choices=_FORMATS, default="exact")
    p_eval.add_argument("--digits", type=_bounded_int(1, 50), default=12)
    p_eval.set_defaults(func=_cmd_eval)

    p_table = sub.add_parser("table", help="render a grid of values")
    p_table.add_argument("--pmax", type=_bounded_int(1, 50), default=5)
    p_table.add_argument("--qmax", type=_bounded_int(1, 50), default=5)
    p_table.add_argument("--format", choices=_FORMATS, default="exact")
    p_table.add_argument("--digits", type=_bounded_int(1, 50), default=12)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="check closed forms against quadrature")
    p_verify.add_argument("--pmax", type=_bounded_int(1, 50), default=12)
    p_verify.add_argument("--qmax", type=_bounded_int(1, 50), default=12)
    p_verify.add_argument("--tol", type=_tolerance, default=1e-6)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
