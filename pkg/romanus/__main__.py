"""
Romanus standalone-mode main entry point: __main__.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License
"""

import argparse
import json
import logging
import sys
from logging import getLogger

from romanus.angles import (RationalAngle, classify, factor_chain, tower, special_angle_table,
                            polygon_perimeter, polygon_pi)
from romanus.config import VERSION, load_settings
from romanus.errors import ConfigError, ParseError, RomanusError, UnsupportedError
from romanus.exactpoly import chebyshev_T, monic_cheb
from romanus.notation import NotationDialect, print_poly, convert
from romanus.radical import PrecisionDecimal, parse, render, evaluate
from romanus.solver import ChebEquation, solve, solve_numeric, verify_romanus, solve_gift

logger = getLogger(__name__)

DIALECTS = [d.value for d in NotationDialect]

# Argument names that are not inputs of a command
_PLUMBING = ('handler', 'json', 'quiet', 'debug', 'version', 'command')


# Digits requested on the command line, or the configured default
def _digits(args, settings):
    digits = getattr(args, 'digits', None)
    return settings.digits if digits is None else digits


# One plain-text line per solution; '*' marks the smallest positive root
def _solution_lines(solutions):
    lines = [f"{len(solutions)} roots: {solutions.positive_count} positive, "
             f"{solutions.negative_count} negative"]

    for i, s in enumerate(solutions):
        mark = "*" if i == solutions.smallest_positive else " "
        parts = [f"{mark} {s.value}"]
        if s.multiplicity > 1:
            parts.append(f"(x{s.multiplicity})")
        if s.angle is not None:
            parts.append(f"2sin({s.angle}*pi)")
        if s.radical is not None:
            parts.append(render(s.radical))
        elif s.angle is not None:
            parts.append(s.classification.value)
        lines.append("  ".join(parts))

    return lines


def cmd_gen(args, settings):
    poly = monic_cheb(args.n) if args.monic else chebyshev_T(args.n)
    text = print_poly(poly, args.dialect)
    result = {'polynomial': text, 'degree': poly.degree, 'coefficients': [str(c) for c in poly.coeffs]}
    return result, [text], None


def cmd_solve(args, settings):
    d = _digits(args, settings)
    solutions = solve(ChebEquation(args.n, parse(args.rhs)), d, settings)
    return solutions.to_dict(), _solution_lines(solutions), d


def cmd_solve_numeric(args, settings):
    d = _digits(args, settings)
    eq = ChebEquation(args.n, PrecisionDecimal.from_text(args.rhs_decimal))
    solutions = solve_numeric(eq, d, settings)
    return solutions.to_dict(), _solution_lines(solutions), d


def cmd_tower(args, settings):
    d = _digits(args, settings)
    e = tower(RationalAngle.from_text(args.angle), args.func, settings)
    if not e:
        raise UnsupportedError(e.reason)

    value = evaluate(e, d, settings)
    return {'radical': render(e), 'value': str(value)}, [render(e), str(value)], d


def cmd_eval(args, settings):
    d = _digits(args, settings)
    value = evaluate(parse(args.expression), d, settings)
    return {'value': str(value)}, [str(value)], d


def cmd_classify(args, settings):
    kind = classify(RationalAngle.from_text(args.angle))
    return {'classification': kind.value}, [kind.value], None


def cmd_chain(args, settings):
    chain = factor_chain(args.n)
    text = "x"
    for c in reversed(chain):
        text = f"T_{c}({text})"
    return {'chain': chain, 'composition': text}, [text], None


def cmd_pi(args, settings):
    d = _digits(args, settings)
    perimeter = polygon_perimeter(args.sides, d, settings)
    estimate = polygon_pi(args.sides, d, settings)
    result = {'perimeter': str(perimeter), 'pi_lower_bound': str(estimate)}
    return result, [f"perimeter {perimeter}", f"pi > {estimate}"], d


def cmd_verify_romanus(args, settings):
    report = verify_romanus(args.example, settings)

    lines = [f"example {report.example}: {report.status}"]
    for check in report.checks:
        verdict = "agrees" if check.agrees else "differs"
        lines.append(f"  {check.name}: {check.lhs} | {check.rhs} | {verdict}")
    if report.solution is not None:
        lines.append(f"  smallest positive root 2sin({report.solution.angle}*pi) = "
                     f"{report.solution.value} ({report.classification.value})")
    if report.description:
        lines.append(f"  {report.description}")

    digits = 19 if report.example == '2' else 30
    return report.to_dict(), lines, digits


def cmd_gift(args, settings):
    d = _digits(args, settings)
    gift = solve_gift(d, settings)

    lines = []
    for name in "ABCDE":
        s = getattr(gift, name)
        form = render(s.radical) if s.radical is not None else s.classification.value
        lines.append(f"{name} = 2sin({s.angle}*pi) = {s.value}  {form}")
    for eq, bound in gift.residuals.items():
        lines.append(f"{eq} residual < {float(bound):.3e}")

    return gift.to_dict(), lines, d


def cmd_convert(args, settings):
    text = convert(args.text, args.source, args.target)
    return {'text': text}, [text], None


def cmd_table(args, settings):
    rows, lines = [], []
    for n, c, s in special_angle_table():
        cos_text = None if c is None else render(c)
        sin_text = None if s is None else render(s)
        rows.append({'n': n, 'cos': cos_text, 'sin': sin_text})
        lines.append(f"{n:>2}  cos(2pi/{n}) = {cos_text or '-'}  sin(2pi/{n}) = {sin_text or '-'}")
    return rows, lines, None


def build_parser():
    # Flags accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', default=argparse.SUPPRESS,
                        help="Print one JSON document instead of plain text")
    common.add_argument('--quiet', action='store_true', default=argparse.SUPPRESS,
                        help="Only report errors on stderr")
    common.add_argument('--debug', action='store_true', default=argparse.SUPPRESS,
                        help="Log precision refinements and recognition candidates")

    parser = argparse.ArgumentParser(
        prog='romanus',
        description="Romanus: exact Chebyshev polynomials, nested radicals and the degree 45 problem",
        epilog="Angles are written p/q and mean (p/q)*pi."
    )
    parser.add_argument('--json', action='store_true', default=False, help=argparse.SUPPRESS)
    parser.add_argument('--quiet', action='store_true', default=False, help=argparse.SUPPRESS)
    parser.add_argument('--debug', action='store_true', default=False, help=argparse.SUPPRESS)
    # Version
    parser.add_argument(
        '-v', '--version',
        action='store_true',
        help='Show version and exit'
    )

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    def command(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command('gen', cmd_gen, "Print T_n, or 2T_n(x/2) with --monic")
    p.add_argument('n', type=int)
    p.add_argument('--monic', action='store_true')
    p.add_argument('--dialect', choices=DIALECTS, default='modern')

    p = command('solve', cmd_solve, "Solve 2T_n(x/2) = b for a radical b")
    p.add_argument('n', type=int)
    p.add_argument('--rhs', required=True, metavar='RADICAL')
    p.add_argument('--digits', type=int)
    p.add_argument('--max-q', type=int, dest='max_q')

    p = command('solve-numeric', cmd_solve_numeric, "Solve 2T_n(x/2) = b for a decimal b")
    p.add_argument('n', type=int)
    p.add_argument('--rhs-decimal', required=True, dest='rhs_decimal', metavar='DECIMAL')
    p.add_argument('--digits', type=int)

    p = command('tower', cmd_tower, "Square-root tower of 2sin or 2cos of an angle")
    p.add_argument('--angle', required=True, metavar='P/Q')
    p.add_argument('--func', choices=['sin', 'cos'], required=True)
    p.add_argument('--digits', type=int)

    p = command('eval', cmd_eval, "Evaluate a radical expression")
    p.add_argument('expression', metavar='RADICAL')
    p.add_argument('--digits', type=int)

    p = command('classify', cmd_classify, "Constructibility class of an angle")
    p.add_argument('--angle', required=True, metavar='P/Q')

    p = command('chain', cmd_chain, "Chebyshev composition chain of n")
    p.add_argument('n', type=int)

    p = command('pi', cmd_pi, "Perimeter of the regular n-gon in the unit circle")
    p.add_argument('--sides', type=int, required=True)
    p.add_argument('--digits', type=int)

    p = command('verify-romanus', cmd_verify_romanus, "Audit one of Romanus's degree 45 problems")
    p.add_argument('--example', choices=['1', '2', '3', 'main'], required=True)

    p = command('gift', cmd_gift, "Solve the new year's gift system")
    p.add_argument('--digits', type=int)

    p = command('convert', cmd_convert, "Convert polynomial text between notations")
    p.add_argument('--from', dest='source', choices=DIALECTS, required=True)
    p.add_argument('--to', dest='target', choices=DIALECTS, required=True)
    p.add_argument('text')

    command('table', cmd_table, "Exact sines and cosines of 2pi/n, n = 1..12")

    return parser


def configure_logging(args):
    if args.debug:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, format="romanus: %(levelname)s: %(message)s")


def main(argv=None) -> int:
    """
    Run romanus according to CLI parameters.
    :param argv: arguments without the program name, sys.argv[1:] by default.
    :return: exit code; 0 on success, 1 on domain errors, 2 on usage and syntax errors.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else 2

    # Handle version
    if args.version:
        print(f"romanus version: {VERSION}")
        return 0

    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    configure_logging(args)

    try:
        settings = load_settings().with_overrides(max_q=getattr(args, 'max_q', None))
        result, lines, digits = args.handler(args, settings)
    except (ParseError, ConfigError) as err:
        logger.error("%s", err)
        return 2
    except RomanusError as err:
        logger.error("%s", err)
        return 1
    except ValueError as err:
        logger.error("%s", err)
        return 2

    if args.json:
        inputs = {k: v for k, v in vars(args).items() if k not in _PLUMBING}
        document = {'command': args.command, 'inputs': inputs, 'result': result, 'certified_digits': digits}
        print(json.dumps(document, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)

    return 0


if __name__ == "__main__":
    sys.exit(main())
