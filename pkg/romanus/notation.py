"""
Historical polynomial notations source: notation.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License

Parsers and printers for three ways of writing an integer polynomial:
    modern  5x - 5x^3 + x^5
    stevin  5(1) - 5(3) + 1(5)     the circled exponent written in parentheses
    viete   5N - 5C + 1QC          N = x, Q = x^2, C = x^3, letters multiply
"""

from enum import Enum

from .errors import ParseError, UnsupportedDialect
from .exactpoly import Polynomial
from .lexer import tokenize, TokenStream
from .ltoken import INTEGER, WORD

SYMBOLS = "+-()^"

# Viete letters and the power of x each stands for
_VIETE_LETTERS = {'N': 1, 'Q': 2, 'C': 3}


class NotationDialect(Enum):
    MODERN = 'modern'
    STEVIN = 'stevin'
    VIETE = 'viete'


def viete_code(e: int) -> str:
    """
    Letter code of x**e: 1 -> N, 2 -> Q, 3 -> C, 4 -> QQ, 5 -> QC, 6 -> CC, 7 -> QQC, ...
        Codes above CC follow the same rule (Q's before C's) and are not attested historically.
    """

    if e < 1:
        raise UnsupportedDialect(f"Viete notation has no letter code for x^{e}")
    if e == 1:
        return "N"

    rest = e % 3
    if rest == 0:
        return "C" * (e // 3)
    if rest == 2:
        return "Q" + "C" * ((e - 2) // 3)
    return "QQ" + "C" * ((e - 4) // 3)


def _viete_exponent(tok) -> int:
    letters = tok.val
    for i, ch in enumerate(letters):
        if ch not in _VIETE_LETTERS:
            raise ParseError(f"Unknown Viete letter {ch!r}", tok.start + i, {"'N'", "'Q'", "'C'"})

    if 'N' in letters and letters != 'N':
        raise ParseError("'N' cannot be combined with other letters", tok.start, {"'Q'", "'C'"})

    return sum(_VIETE_LETTERS[ch] for ch in letters)


# Term parsers: each returns (exponent, unsigned coefficient)

def _modern_term(ts: TokenStream):
    coeff = None
    if ts.current.kind == INTEGER:
        coeff = int(ts.advance().val)

    if ts.current.kind == WORD:
        if ts.current.val != 'x':
            ts.fail({"'x'"})
        ts.advance()
        exponent = 1
        if ts.accept('^'):
            exponent = int(ts.expect_kind(INTEGER, "integer").val)
        return exponent, 1 if coeff is None else coeff

    if coeff is None:
        ts.fail({"integer", "'x'"})
    return 0, coeff


def _stevin_term(ts: TokenStream):
    coeff = int(ts.expect_kind(INTEGER, "integer").val)
    if ts.accept('('):
        exponent = int(ts.expect_kind(INTEGER, "integer").val)
        ts.expect(')')
        return exponent, coeff
    return 0, coeff


def _viete_term(ts: TokenStream):
    coeff = int(ts.expect_kind(INTEGER, "integer").val)
    tok = ts.expect_kind(WORD, "Viete letters")
    return _viete_exponent(tok), coeff


_TERM_PARSERS = {
    NotationDialect.MODERN: _modern_term,
    NotationDialect.STEVIN: _stevin_term,
    NotationDialect.VIETE: _viete_term,
}


def parse_poly(text: str, dialect) -> Polynomial:
    """
    Read a polynomial written in one of the dialects; like terms are added.
    :param text: polynomial text, white space is ignored.
    :param dialect: NotationDialect or its name.
    :return: Polynomial.
    """

    dialect = NotationDialect(dialect)
    parse_term = _TERM_PARSERS[dialect]
    ts = TokenStream(tokenize(text, SYMBOLS))

    terms = {}
    sign = -1 if ts.accept('-') else 1
    if sign > 0:
        ts.accept('+')

    while True:
        exponent, coeff = parse_term(ts)
        terms[exponent] = terms.get(exponent, 0) + sign * coeff

        if ts.accept('+'):
            sign = 1
        elif ts.accept('-'):
            sign = -1
        elif ts.at_end():
            break
        else:
            ts.fail({"'+'", "'-'", "end of input"})

    return Polynomial.from_terms(terms)


def _modern_body(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    power = "x" if e == 1 else f"x^{e}"
    return power if c == 1 else f"{c}{power}"


def _stevin_body(e: int, c: int) -> str:
    return str(c) if e == 0 else f"{c}({e})"


def _viete_body(e: int, c: int) -> str:
    return f"{c}{viete_code(e)}"


_TERM_PRINTERS = {
    NotationDialect.MODERN: _modern_body,
    NotationDialect.STEVIN: _stevin_body,
    NotationDialect.VIETE: _viete_body,
}


def print_poly(p: Polynomial, dialect) -> str:
    """
    Canonical text in ascending powers, e.g. '45(1) - 3795(3) + ... + 1(45)'.
    :raises UnsupportedDialect: Viete text for a polynomial with a constant term or for zero.
    """

    dialect = NotationDialect(dialect)
    terms = p.terms()

    if dialect is NotationDialect.VIETE:
        if not terms or terms[0][0] == 0:
            raise UnsupportedDialect("Viete notation cannot write a constant term")
    if not terms:
        return "0"

    body = _TERM_PRINTERS[dialect]
    out = []
    for i, (e, c) in enumerate(terms):
        text = body(e, abs(c))
        if i == 0:
            out.append(text if c > 0 else "-" + text)
        else:
            out.append((" + " if c > 0 else " - ") + text)

    return "".join(out)


def convert(text: str, source, target) -> str:
    """
    Re-write polynomial text from one dialect into another.
    """

    return print_poly(parse_poly(text, source), target)
