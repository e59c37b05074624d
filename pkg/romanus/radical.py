"""
Nested radical expressions source: radical.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License

Expression trees over the rationals closed under +, -, *, / and square roots, with a
recursive-descent parser, a canonical printer and evaluation to a guaranteed number of
decimal digits.
"""

from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from math import isqrt

from .config import load_settings
from .errors import DomainError, DivisionByZero, UndecidableSign
from .interval import Interval, StraddlesZero, digits_to_bits
from .lexer import tokenize, TokenStream
from .ltoken import INTEGER, WORD

logger = getLogger(__name__)

SYMBOLS = "+-*/()"
ALIASES = {'√': 'sqrt'}


class RadicalExpr:
    """
    Base class of the expression tree nodes; str() gives the canonical text.
    """

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Literal(RadicalExpr):
    """
    A nonnegative rational constant.
    """

    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        if value < 0:
            raise ValueError("Literal values are nonnegative; wrap them in Negation")
        object.__setattr__(self, 'value', value)


@dataclass(frozen=True)
class Sqrt(RadicalExpr):
    child: RadicalExpr


@dataclass(frozen=True)
class Negation(RadicalExpr):
    child: RadicalExpr


@dataclass(frozen=True)
class Sum(RadicalExpr):
    """
    children[0] + signs[1]*children[1] + ...; signs[0] is always +1.
    """

    children: tuple
    signs: tuple = None

    def __post_init__(self):
        children = tuple(self.children)
        signs = (1,) * len(children) if self.signs is None else tuple(self.signs)

        if len(children) < 2:
            raise ValueError("A sum needs at least two terms")
        if len(signs) != len(children):
            raise ValueError("One sign per summand is required")
        if signs[0] != 1 or any(s not in (1, -1) for s in signs):
            raise ValueError("Sum signs are +1/-1 with a leading +1")

        object.__setattr__(self, 'children', children)
        object.__setattr__(self, 'signs', signs)


@dataclass(frozen=True)
class Product(RadicalExpr):
    children: tuple

    def __post_init__(self):
        children = tuple(self.children)
        if len(children) < 2:
            raise ValueError("A product needs at least two factors")
        object.__setattr__(self, 'children', children)


@dataclass(frozen=True)
class Quotient(RadicalExpr):
    numer: RadicalExpr
    denom: RadicalExpr


def lit(value) -> RadicalExpr:
    """
    Literal for any rational, negative values wrapped in a Negation.
    """

    value = Fraction(value)
    if value < 0:
        return Negation(Literal(-value))
    return Literal(value)


def depth(e: RadicalExpr) -> int:
    if isinstance(e, Literal):
        return 1
    if isinstance(e, (Sqrt, Negation)):
        return 1 + depth(e.child)
    if isinstance(e, Quotient):
        return 1 + max(depth(e.numer), depth(e.denom))
    return 1 + max(depth(c) for c in e.children)


# Parsing

def parse(text: str) -> RadicalExpr:
    """
    Parse radical text.
        expr   := term (('+'|'-') term)*
        term   := factor (('*'|'/') factor)*
        factor := INTEGER | INTEGER '/' INTEGER | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
    :param text: expression text, '√' is read as 'sqrt'.
    :return: RadicalExpr.
    """

    ts = TokenStream(tokenize(text, SYMBOLS, ALIASES))
    e = _parse_expr(ts)
    if not ts.at_end():
        ts.fail({"'+'", "'-'", "'*'", "'/'", "end of input"})
    return e


def _parse_expr(ts: TokenStream) -> RadicalExpr:
    children = [_parse_term(ts)]
    signs = [1]

    while True:
        if ts.accept('+'):
            signs.append(1)
        elif ts.accept('-'):
            signs.append(-1)
        else:
            break
        children.append(_parse_term(ts))

    if len(children) == 1:
        return children[0]
    return Sum(tuple(children), tuple(signs))


def _parse_term(ts: TokenStream) -> RadicalExpr:
    factors = [_parse_factor(ts)]

    while True:
        if ts.accept('*'):
            factors.append(_parse_factor(ts))
        elif ts.accept('/'):
            factors = [Quotient(_collapse(factors), _parse_factor(ts))]
        else:
            break

    return _collapse(factors)


def _collapse(factors: list) -> RadicalExpr:
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def _parse_factor(ts: TokenStream) -> RadicalExpr:
    tok = ts.current

    if tok.kind == INTEGER:
        ts.advance()
        num = int(tok.val)
        if ts.current == '/' and ts.peek().kind == INTEGER:
            ts.advance()
            den = int(ts.advance().val)
            if den == 0:
                return Quotient(Literal(num), Literal(0))
            return Literal(Fraction(num, den))
        return Literal(num)

    if tok.kind == WORD:
        if tok.val != 'sqrt':
            ts.fail({"'sqrt'"}, f"Unknown function {tok.val!r}")
        ts.advance()
        ts.expect('(')
        inner = _parse_expr(ts)
        ts.expect(')')
        return Sqrt(inner)

    if ts.accept('('):
        inner = _parse_expr(ts)
        ts.expect(')')
        return inner

    if ts.accept('-'):
        return Negation(_parse_factor(ts))

    ts.fail({"integer", "'sqrt'", "'('", "'-'"})


# Printing

def render(e: RadicalExpr) -> str:
    """
    Canonical text of an expression; parse(render(e)) == e.
    """

    if isinstance(e, Literal):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    if isinstance(e, Sqrt):
        return f"sqrt({render(e.child)})"

    if isinstance(e, Negation):
        if isinstance(e.child, (Literal, Sqrt, Negation)):
            return "-" + render(e.child)
        return f"-({render(e.child)})"

    if isinstance(e, Sum):
        out = []
        for i, (sign, child) in enumerate(zip(e.signs, e.children)):
            text = render(child)
            if isinstance(child, Sum):
                text = f"({text})"
            if i:
                out.append(" + " if sign > 0 else " - ")
            out.append(text)
        return "".join(out)

    if isinstance(e, Product):
        out = []
        for i, child in enumerate(e.children):
            text = render(child)
            if isinstance(child, (Sum, Product)) or (i and isinstance(child, Quotient)):
                text = f"({text})"
            out.append(text)
        return "*".join(out)

    if isinstance(e, Quotient):
        numer = render(e.numer)
        if isinstance(e.numer, Sum):
            numer = f"({numer})"

        denom = render(e.denom)
        d = e.denom
        if isinstance(d, Literal) and d.value.denominator == 1:
            if numer[-1].isdigit():
                denom = f"({denom})"
        elif not isinstance(d, (Sqrt, Negation)):
            denom = f"({denom})"

        return f"{numer}/{denom}"

    raise TypeError(f"Not a radical expression: {e!r}")


# Decimal results

def _round_half_away(x: Fraction) -> int:
    n = abs(x)
    r = (2 * n.numerator + n.denominator) // (2 * n.denominator)
    return -r if x < 0 else r


@dataclass(frozen=True)
class PrecisionDecimal:
    """
    Decimal approximation scaled/10**digits whose true value lies within 10**-digits.
    Printed with exactly 'digits' fractional digits.
    """

    scaled: int
    digits: int

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("A decimal needs at least one guaranteed digit")

    @classmethod
    def from_fraction(cls, value, digits: int):
        """
        Nearest decimal, ties away from zero.
        """

        return cls(_round_half_away(Fraction(value) * 10 ** digits), digits)

    @classmethod
    def from_interval(cls, iv: Interval, digits: int, strict: bool = True):
        """
        Decimal of a value known to lie in iv.
        :param strict: require both endpoints to round alike; return None otherwise.
        :return: PrecisionDecimal or None.
        """

        scale = 10 ** digits
        lo = _round_half_away(iv.lower * scale)
        hi = _round_half_away(iv.upper * scale)
        if lo == hi:
            return cls(lo, digits)
        if strict or iv.width * scale * 2 > 1:
            return None
        return cls(_round_half_away(iv.midpoint * scale), digits)

    @classmethod
    def from_text(cls, text: str):
        """
        Read a plain decimal such as '1.7401739822174228373'; its guaranteed digits are
        the digits written after the point.
        """

        text = text.strip()
        try:
            value = Fraction(text)
        except ValueError:
            raise ValueError(f"Malformed decimal {text!r}") from None

        _, _, frac = text.partition('.')
        return cls.from_fraction(value, max(len(frac), 1))

    @property
    def guaranteed_digits(self):
        return self.digits

    def to_fraction(self) -> Fraction:
        return Fraction(self.scaled, 10 ** self.digits)

    def lower(self) -> Fraction:
        return Fraction(self.scaled - 1, 10 ** self.digits)

    def upper(self) -> Fraction:
        return Fraction(self.scaled + 1, 10 ** self.digits)

    def sign(self) -> int:
        return (self.scaled > 0) - (self.scaled < 0)

    def __float__(self):
        return float(self.to_fraction())

    def __str__(self):
        whole, frac = divmod(abs(self.scaled), 10 ** self.digits)
        sign = "-" if self.scaled < 0 else ""
        return f"{sign}{whole}.{frac:0{self.digits}d}"


# Evaluation

class _Refine(Exception):
    """
    A sign could not be decided at the current precision.
    """

    def __init__(self, path, node):
        super().__init__()
        self.path = path
        self.node = node


def _exact_sqrt(value: Fraction):
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _enclose(e: RadicalExpr, bits: int, path: tuple):
    """
    Fraction when the node is rational by exact arithmetic, Interval otherwise.
    """

    if isinstance(e, Literal):
        return e.value

    if isinstance(e, Negation):
        return -_enclose(e.child, bits, path + (0,))

    if isinstance(e, Sum):
        acc = None
        for i, (sign, child) in enumerate(zip(e.signs, e.children)):
            v = _enclose(child, bits, path + (i,))
            acc = v if acc is None else (acc + v if sign > 0 else acc - v)
        return acc

    if isinstance(e, Product):
        acc = None
        for i, child in enumerate(e.children):
            v = _enclose(child, bits, path + (i,))
            acc = v if acc is None else acc * v
        return acc

    if isinstance(e, Quotient):
        numer = _enclose(e.numer, bits, path + (0,))
        denom = _enclose(e.denom, bits, path + (1,))
        if isinstance(denom, Fraction):
            if denom == 0:
                raise DivisionByZero(path, render(e))
            return numer / denom
        try:
            return numer / denom
        except ZeroDivisionError:
            raise DivisionByZero(path, render(e)) from None
        except StraddlesZero:
            raise _Refine(path, e) from None

    if isinstance(e, Sqrt):
        v = _enclose(e.child, bits, path + (0,))
        if isinstance(v, Fraction):
            if v < 0:
                raise DomainError(path, render(e))
            root = _exact_sqrt(v)
            if root is not None:
                return root
            v = Interval.from_fraction(v, bits)
        if v.is_negative():
            raise DomainError(path, render(e))
        if v.lo < 0:
            raise _Refine(path, e)
        return v.sqrt()

    raise TypeError(f"Not a radical expression: {e!r}")


def _initial_bits(e: RadicalExpr, digits: int) -> int:
    return digits_to_bits(digits + 10 + 2 * depth(e))


def _enclose_refined(e: RadicalExpr, bits: int, refine_limit: int):
    for attempt in range(refine_limit + 1):
        try:
            return _enclose(e, bits, ())
        except _Refine as err:
            if attempt == refine_limit:
                raise UndecidableSign(err.path, render(err.node)) from None
            logger.debug("Sign undecided at %s with %d bits, refining", err.path, bits)
            bits *= 2


def rational_value(e: RadicalExpr):
    """
    Exact value when every node of e is rational (perfect-square radicands included).
    :return: Fraction or None.
    """

    try:
        v = _enclose(e, 8, ())
    except _Refine:
        return None
    return v if isinstance(v, Fraction) else None


def enclose(e: RadicalExpr, bits: int, settings=None) -> Interval:
    """
    Rigorous enclosure of e at (at least) the given binary scale.
    :raises DomainError, DivisionByZero: when certain.
    :raises UndecidableSign: when a sign stays undecided after the refinement limit.
    """

    settings = settings or load_settings()
    v = _enclose_refined(e, bits, settings.refine_limit)
    if isinstance(v, Fraction):
        return Interval.from_fraction(v, bits)
    return v


def evaluate(e: RadicalExpr, d: int, settings=None) -> PrecisionDecimal:
    """
    Value of e with d guaranteed decimal digits.
        Precision doubles until both ends of the enclosure round to the same decimal.
    :param e: expression.
    :param d: number of digits after the decimal point, d >= 1.
    :return: PrecisionDecimal.
    """

    settings = settings or load_settings()
    return certify(lambda bits: _enclose_refined(e, bits, settings.refine_limit),
                   d, _initial_bits(e, d), settings, label=render(e))


def certify(enclosure, d: int, bits: int, settings=None, label: str = "value") -> PrecisionDecimal:
    """
    Decimal of a quantity known through enclosures.
    :param enclosure: callable taking a binary scale and returning an Interval or an exact Fraction.
    :param d: guaranteed digits.
    :param bits: starting scale, doubled while the rounding stays undecided.
    :param label: how the quantity is named in logs and errors.
    :return: PrecisionDecimal.
    """

    if d < 1:
        raise ValueError(f"Requested digits must be positive, got {d}")

    settings = settings or load_settings()

    for attempt in range(settings.refine_limit + 1):
        v = enclosure(bits)
        if isinstance(v, (int, Fraction)):
            return PrecisionDecimal.from_fraction(v, d)

        result = PrecisionDecimal.from_interval(v, d, strict=attempt < settings.refine_limit)
        if result is not None:
            return result

        logger.debug("Rounding of %s undecided with %d bits, refining", label, v.bits)
        bits = v.bits * 2

    raise UndecidableSign((), label)


def numeric_equal(a: RadicalExpr, b: RadicalExpr, d: int, settings=None) -> bool:
    """
    Whether |a - b| < 10**-d, decided on rigorous enclosures.
    """

    if d < 1:
        raise ValueError(f"Requested digits must be positive, got {d}")
    if a == b:
        return True

    bound = Fraction(1, 10 ** d)
    ra, rb = rational_value(a), rational_value(b)
    if ra is not None and rb is not None:
        return abs(ra - rb) < bound

    settings = settings or load_settings()
    bits = max(_initial_bits(a, d), _initial_bits(b, d))

    for _ in range(settings.refine_limit + 1):
        diff = enclose(a, bits, settings) - enclose(b, bits, settings)
        if diff.magnitude() < bound:
            return True
        if diff.mignitude() >= bound:
            return False
        bits = diff.bits * 2

    raise UndecidableSign((), f"{render(a)} - ({render(b)})")
