"""
Angles at rational multiples of pi source: angles.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License

Exact sine and cosine values, square-root towers built with the half-angle rules,
constructibility classes, Chebyshev composition chains, regular polygon perimeters and
a rigorous cosine engine that never calls a transcendental function.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from math import isqrt

from .config import load_settings
from .errors import RomanusError, UnsupportedError
from .interval import Interval, digits_to_bits
from .radical import (RadicalExpr, Literal, Sqrt, Negation, Sum, Product, Quotient,
                      parse, enclose, evaluate, certify, depth, PrecisionDecimal)

logger = getLogger(__name__)

HALF = Fraction(1, 2)

# Exact doubled cosines, 2cos(r*pi)
_EXACT_DOUBLE_COS = {
    Fraction(0): Fraction(2),
    Fraction(1, 3): Fraction(1),
    Fraction(1, 2): Fraction(0),
    Fraction(2, 3): Fraction(-1),
    Fraction(1): Fraction(-2),
}

# First quadrant angles of the special angle table: r -> (cos, sin) of r*pi
_SPECIAL_ANGLES = {
    Fraction(0): ("1", "0"),
    Fraction(1, 6): ("sqrt(3)/2", "1/2"),
    Fraction(1, 5): ("(sqrt(5)+1)/4", "sqrt(10-2*sqrt(5))/4"),
    Fraction(1, 4): ("sqrt(2)/2", "sqrt(2)/2"),
    Fraction(1, 3): ("1/2", "sqrt(3)/2"),
    Fraction(2, 5): ("(sqrt(5)-1)/4", "sqrt(10+2*sqrt(5))/4"),
    Fraction(1, 2): ("0", "1"),
}


class Trig(Enum):
    SIN = 'sin'
    COS = 'cos'


class ConstructibilityClass(Enum):
    SQUARE_ROOTS_ONLY = 'SquareRootsOnly'
    NEEDS_CUBIC = 'NeedsCubic'
    NEEDS_QUINTIC = 'NeedsQuintic'
    NEEDS_CUBIC_AND_QUINTIC = 'NeedsCubicAndQuintic'
    OUT_OF_SCOPE = 'OutOfScope'


@dataclass(frozen=True)
class Unsupported:
    """
    Placeholder returned where no square-root form exists; always false in a boolean context.
    """

    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class RationalAngle:
    """
    The angle (p/q)*pi, kept in lowest terms with 0 <= p/q < 2.
    """

    p: int
    q: int = 1

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("Angle denominator must be nonzero")

        r = Fraction(self.p, self.q) % 2
        object.__setattr__(self, 'p', r.numerator)
        object.__setattr__(self, 'q', r.denominator)

    @classmethod
    def from_fraction(cls, r):
        r = Fraction(r)
        return cls(r.numerator, r.denominator)

    @classmethod
    def from_text(cls, text: str):
        """
        Read 'p/q', meaning (p/q)*pi.
        """

        try:
            r = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Malformed angle {text!r}, expected p/q") from None
        return cls.from_fraction(r)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


def _ratio(a) -> Fraction:
    if isinstance(a, RationalAngle):
        return a.ratio
    return Fraction(a)


# Classification and chains

def classify(a) -> ConstructibilityClass:
    """
    Square-root constructibility of an angle, judged on the 3 and 5 parts of its denominator.
    :param a: RationalAngle (or anything Fraction accepts).
    :return: ConstructibilityClass.
    """

    m = _ratio(a).denominator
    while m % 2 == 0:
        m //= 2

    counts = {}
    for p in (3, 5):
        counts[p] = 0
        while m % p == 0:
            m //= p
            counts[p] += 1

    if m != 1:
        return ConstructibilityClass.OUT_OF_SCOPE

    cubic, quintic = counts[3] > 1, counts[5] > 1
    if cubic and quintic:
        return ConstructibilityClass.NEEDS_CUBIC_AND_QUINTIC
    if cubic:
        return ConstructibilityClass.NEEDS_CUBIC
    if quintic:
        return ConstructibilityClass.NEEDS_QUINTIC
    return ConstructibilityClass.SQUARE_ROOTS_ONLY


def factor_chain(n: int) -> list:
    """
    Prime factors of n ordered outer to inner, so T_n = T_c0(T_c1(...(T_ck(x)))).
        Small primes are outermost: 675 -> [3, 3, 3, 5, 5], 300 -> [2, 2, 3, 5, 5].
    """

    if n < 1:
        raise ValueError(f"Chain length must be positive, got {n}")

    primes = []
    m, p = n, 2
    while p * p <= m:
        while m % p == 0:
            primes.append(p)
            m //= p
        p += 1
    if m > 1:
        primes.append(m)

    return primes


# Surds for the angles k*pi/30

def _squarefree(n: int):
    """
    Split n = g*g*s with s squarefree; returns (g, s).
    """

    g, s, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            g *= p
            n //= p * p
        if n % p == 0:
            s *= p
            n //= p
        p += 1
    return g, s * n


def _key_product(k1, k2):
    if k1 == 1:
        return 1, k2
    if k2 == 1:
        return 1, k1
    if isinstance(k1, int) and isinstance(k2, int):
        g, s = _squarefree(k1 * k2)
        return g, s
    if isinstance(k1, tuple) and isinstance(k2, tuple):
        raise ValueError("Product of two nested surds")

    n, (a, b, m) = (k1, k2) if isinstance(k1, int) else (k2, k1)
    return 1, (n * a, n * b, m)


class _Surd:
    """
    Sum of c*sqrt(key) terms in insertion order.
        Key 1 is the rational part, an int n > 1 stands for sqrt(n) with n squarefree and a
        tuple (a, b, n) for sqrt(a + b*sqrt(n)).
    """

    def __init__(self, terms=None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items()}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return _Surd(out)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _Surd({k: c * other for k, c in self.terms.items()})

        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                g, k = _key_product(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2 * g
        return _Surd(out)

    def to_expr(self) -> RadicalExpr:
        """
        Radical expression with rational factors moved under the roots, c*sqrt(R) = sqrt(c*c*R).
        """

        signed = []
        for key, c in self.terms.items():
            if not c:
                continue

            if key == 1:
                node = Literal(abs(c))
            elif isinstance(key, int):
                node = Sqrt(Literal(c * c * key))
            else:
                a, b, n = key
                inner = [(1 if a > 0 else -1, Literal(abs(c * c * a))),
                         (1 if b > 0 else -1, Sqrt(Literal(c ** 4 * b * b * n)))]
                node = Sqrt(_from_signed(inner))

            signed.append((1 if c > 0 else -1, node))

        return _from_signed(signed)


_FIRST_QUADRANT_COS = {
    0: _Surd({1: 1}),
    3: _Surd({(10, 2, 5): Fraction(1, 4)}),
    5: _Surd({3: Fraction(1, 2)}),
    6: _Surd({1: Fraction(1, 4), 5: Fraction(1, 4)}),
    9: _Surd({(10, -2, 5): Fraction(1, 4)}),
    10: _Surd({1: Fraction(1, 2)}),
    12: _Surd({1: Fraction(-1, 4), 5: Fraction(1, 4)}),
    15: _Surd(),
}


def _cos_sin_30(m: int):
    """
    (cos, sin) of m*pi/30 for m a multiple of 3 or 5.
    """

    m %= 60
    cs = ss = 1
    if m > 30:
        m, ss = 60 - m, -1
    if m > 15:
        m, cs = 30 - m, -1
    return _FIRST_QUADRANT_COS[m] * cs, _FIRST_QUADRANT_COS[15 - m] * ss


def _cos_30(k: int) -> _Surd:
    """
    cos(k*pi/30) through cos(A + B) with A = x*pi/6, B = y*pi/10 and 5x + 3y = k.
    """

    best = None
    for x in range(3, -4, -1):
        if (k - 5 * x) % 3:
            continue
        y = (k - 5 * x) // 3
        if best is None or abs(x) + abs(y) < abs(best[0]) + abs(best[1]):
            best = (x, y)

    x, y = best
    cos_a, sin_a = _cos_sin_30(5 * x)
    cos_b, sin_b = _cos_sin_30(3 * y)
    return cos_a * cos_b - sin_a * sin_b


# Expression helpers

def _from_signed(terms: list) -> RadicalExpr:
    if not terms:
        return Literal(0)

    (s0, n0), tail = terms[0], terms[1:]
    first = n0 if s0 > 0 else Negation(n0)
    if not tail:
        return first
    return Sum((first,) + tuple(n for _, n in tail), (1,) + tuple(s for s, _ in tail))


def _flatten(e: RadicalExpr, sign: int = 1) -> list:
    if isinstance(e, Negation):
        return _flatten(e.child, -sign)
    if isinstance(e, Sum):
        out = []
        for s, child in zip(e.signs, e.children):
            out.extend(_flatten(child, sign * s))
        return out
    return [(sign, e)]


def _offset(const, sign: int, e: RadicalExpr) -> RadicalExpr:
    """
    const + sign*e with the rational terms merged into the constant.
    """

    const = Fraction(const)
    rest = []
    for s, node in _flatten(e, sign):
        if isinstance(node, Literal):
            const += s * node.value
        else:
            rest.append((s, node))

    head = [(1 if const > 0 else -1, Literal(abs(const)))] if const else []
    return _from_signed(head + rest)


def _negate(e: RadicalExpr) -> RadicalExpr:
    if isinstance(e, Negation):
        return e.child
    if isinstance(e, Literal) and e.value == 0:
        return e
    return Negation(e)


def _sqrt(e: RadicalExpr) -> RadicalExpr:
    if isinstance(e, Literal):
        num, den = e.value.numerator, e.value.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Literal(Fraction(rn, rd))
    return Sqrt(e)


def _half(e: RadicalExpr) -> RadicalExpr:
    if isinstance(e, Literal):
        return Literal(e.value / 2)
    if isinstance(e, Negation) and isinstance(e.child, Literal):
        return Negation(Literal(e.child.value / 2))
    return Quotient(e, Literal(2))


@lru_cache(maxsize=None)
def _double_cos(r: Fraction) -> RadicalExpr:
    """
    2cos(r*pi) for r in [0, 1] by the half-angle rule, down to the angles k*pi/30.
    """

    if r > HALF:
        return _negate(_double_cos(1 - r))
    if 30 % r.denominator == 0:
        return (_cos_30(r.numerator * (30 // r.denominator)) * 2).to_expr()
    if r.denominator % 2:
        raise ValueError(f"No square-root tower for 2cos({r}*pi)")
    return _sqrt(_offset(2, 1, _double_cos(2 * r)))


# Exact values and towers

def _first_quadrant_cos(f: Fraction) -> RadicalExpr:
    if f in _SPECIAL_ANGLES:
        return parse(_SPECIAL_ANGLES[f][0])
    if HALF - f in _SPECIAL_ANGLES:
        return parse(_SPECIAL_ANGLES[HALF - f][1])
    if 30 % f.denominator == 0:
        return _cos_30(f.numerator * (30 // f.denominator)).to_expr()
    return Quotient(_double_cos(f), Literal(2))


def exact_value(a, which):
    """
    Exact sin or cos of an angle.
        Special angles come out in their table form, other angles with denominator dividing 30
        through the angle-sum identities and the remaining constructible angles as half a tower.
    :param a: RationalAngle.
    :param which: Trig member or 'sin' / 'cos'.
    :return: RadicalExpr, or Unsupported when no square-root form exists.
    """

    which = Trig(which)
    kind = classify(a)
    if kind is not ConstructibilityClass.SQUARE_ROOTS_ONLY:
        return Unsupported(f"{which.value}({a}*pi) is {kind.value}")

    r = _ratio(a) % 2
    cos_sign = sin_sign = 1
    if r >= 1:
        r -= 1
        cos_sign = sin_sign = -1
    if r > HALF:
        r = 1 - r
        cos_sign = -cos_sign

    if which is Trig.COS:
        value, sign = _first_quadrant_cos(r), cos_sign
    else:
        value, sign = _first_quadrant_cos(HALF - r), sin_sign

    return value if sign > 0 else _negate(value)


def tower(a, which, settings=None):
    """
    Nested square roots for 2sin(a) or 2cos(a), a in (0, pi/2].
        Cosines come from 2cos(t/2) = sqrt(2 + 2cos t) and sines from 2sin(t/2) = sqrt(2 - 2cos t).
    :param a: RationalAngle with ratio in (0, 1/2].
    :param which: Trig member or 'sin' / 'cos'.
    :param settings: Settings; verify_towers re-checks the result at 40 digits.
    :return: RadicalExpr, or Unsupported when the angle is not square-root constructible.
    """

    which = Trig(which)
    r = _ratio(a)
    if not 0 < r <= HALF:
        raise ValueError(f"Tower angles lie in (0, pi/2], got {r}*pi")

    kind = classify(r)
    if kind is not ConstructibilityClass.SQUARE_ROOTS_ONLY:
        return Unsupported(f"2{which.value}({r}*pi) is {kind.value}")

    settings = settings or load_settings()
    return _build_tower(r, which, settings.verify_towers)


@lru_cache(maxsize=4096)
def _build_tower(r: Fraction, which: Trig, verify: bool) -> RadicalExpr:
    if which is Trig.COS:
        e = _double_cos(r)
    else:
        e = _sqrt(_offset(2, -1, _double_cos(2 * r)))

    if verify:
        _verify_tower(e, r, which)
    return e


def _verify_tower(e: RadicalExpr, r: Fraction, which: Trig, digits: int = 40):
    bits = digits_to_bits(digits + 10 + 2 * depth(e))
    c, s = cos_sin_pi(r, bits)
    reference = (c if which is Trig.COS else s) * 2

    diff = enclose(e, bits) - reference
    if diff.magnitude() >= Fraction(1, 10 ** digits):
        raise RomanusError(f"Tower for 2{which.value}({r}*pi) disagrees with the angle engine")
    logger.debug("Tower for 2%s(%s*pi) verified to %d digits", which.value, r, digits)


def special_angle_table() -> list:
    """
    Rows (n, cos(2pi/n), sin(2pi/n)) for n = 1..12, with None where no square-root form exists.
    """

    rows = []
    for n in range(1, 13):
        a = RationalAngle(2, n)
        c = exact_value(a, Trig.COS)
        if not c:
            rows.append((n, None, None))
        else:
            rows.append((n, c, exact_value(a, Trig.SIN)))
    return rows


def t2_preimages(y: RadicalExpr):
    """
    Both solutions of T_2(x) = y, that is x = +-sqrt((y + 1)/2).
    """

    root = _sqrt(_offset(HALF, 1, _half(y)))
    return root, _negate(root)


def zero_tower(j: int) -> RadicalExpr:
    """
    cos(pi/2**(j+1)), the largest zero of T_(2**j), by j inversions of T_2 starting from 0.
    """

    if j < 0:
        raise ValueError(f"Tower height must be nonnegative, got {j}")

    y = Literal(0)
    for _ in range(j):
        y = t2_preimages(y)[0]
    return y


# Rigorous cosine engine

@lru_cache(maxsize=8)
def _rotation_table(bits: int) -> tuple:
    """
    (cos, sin) of pi/2**i for i = 1..bits+1, from cos(t/2) = sqrt((1 + cos t)/2) and
    sin(t/2) = sin(t)/(2cos(t/2)).
    """

    c = Interval.from_fraction(0, bits)
    s = Interval.from_fraction(1, bits)
    table = [(c, s)]
    for _ in range(bits):
        c = ((c + 1) / 2).sqrt()
        s = s / (c * 2)
        table.append((c, s))
    return tuple(table)


def cos_sin_pi(r, bits: int):
    """
    Enclosures of cos(r*pi) and sin(r*pi) for a rational r.
        The reduced angle is rotated by pi/2**i for every binary digit i of r; the truncated
        remainder rho widens both results by 4*rho.
    :param r: rational multiple of pi.
    :param bits: binary scale of the result.
    :return: (Interval, Interval).
    """

    r = Fraction(r) % 2
    cs = ss = 1
    if r >= 1:
        r -= 1
        cs = ss = -1
    if r > HALF:
        r = 1 - r
        cs = -cs

    work = bits + bits.bit_length() + 8
    table = _rotation_table(work)

    scaled = (r.numerator << work) // r.denominator
    rest = r - Fraction(scaled, 1 << work)

    c = Interval.from_fraction(1, work)
    s = Interval.from_fraction(0, work)
    for i in range(1, work + 1):
        if (scaled >> (work - i)) & 1:
            ci, si = table[i - 1]
            c, s = c * ci - s * si, s * ci + c * si

    if rest:
        c, s = c.widen(4 * rest), s.widen(4 * rest)

    return (c * cs).rebase(bits), (s * ss).rebase(bits)


def invert_double_cos(b, bits: int):
    """
    Bracket [lo, hi] of t in [0, 1] with 2cos(t*pi) = b.
        Binary digits of t are fixed greedily while the comparison with b is certain; when it
        is not, the bracket is centered on the last candidate.
    :param b: Interval or rational inside [-2, 2].
    :param bits: working binary scale.
    :return: (Fraction, Fraction).
    """

    if not isinstance(b, Interval):
        b = Interval.from_fraction(b, bits)
    exact_b = b.lower if b.is_point() else None

    work = bits + bits.bit_length() + 8
    table = _rotation_table(work)

    # (cos, sin) of acc*pi, rotated by pi/2**j for each accepted digit
    acc = Fraction(0)
    c = Interval.from_fraction(1, work)
    s = Interval.from_fraction(0, work)
    for j in range(1, bits + 1):
        cand = acc + Fraction(1, 1 << j)
        cj, sj = table[j - 1]
        cand_c = c * cj - s * sj
        f = cand_c * 2

        if f.lower > b.upper:
            acc = cand
            c, s = cand_c, s * cj + c * sj
        elif f.upper < b.lower:
            continue
        else:
            if exact_b is not None and _EXACT_DOUBLE_COS.get(cand) == exact_b:
                return cand, cand
            return _recenter(cand, (cand_c, s * cj + c * sj), j, acc, b, bits, table)

    return acc, acc + Fraction(1, 1 << bits)


def _recenter(cand: Fraction, cand_cs: tuple, j: int, acc: Fraction, b: Interval, bits: int, table: tuple):
    c, s = cand_cs

    # cos((cand -+ h)*pi) = cos(cand*pi)cos(h*pi) +- sin(cand*pi)sin(h*pi), h = 2**-m
    def certified(m):
        h = Fraction(1, 1 << m)
        cm, sm = table[m - 1]
        left = cand - h <= 0 or (c * cm + s * sm).lower * 2 > b.upper
        right = cand + h >= 1 or (c * cm - s * sm).upper * 2 < b.lower
        return left and right

    if not certified(j):
        return acc, min(acc + Fraction(2, 1 << j), Fraction(1))

    lo_m, hi_m = j, bits
    while lo_m < hi_m:
        mid = (lo_m + hi_m + 1) // 2
        if certified(mid):
            lo_m = mid
        else:
            hi_m = mid - 1

    h = Fraction(1, 1 << lo_m)
    logger.debug("Inversion bracket recentered on %s with half width 2**-%d", cand, lo_m)
    return max(cand - h, Fraction(0)), min(cand + h, Fraction(1))


def engine_decimal(r, which, d: int, scale=1, settings=None) -> PrecisionDecimal:
    """
    scale * 2sin(r*pi) or scale * 2cos(r*pi) to d digits from the cosine engine.
    """

    which = Trig(which)
    index = 0 if which is Trig.COS else 1

    def enclosure(bits):
        return cos_sin_pi(r, bits)[index] * (2 * scale)

    return certify(enclosure, d, digits_to_bits(d + 10) + int(abs(scale)).bit_length() + 1, settings,
                   label=f"{2 * scale}{which.value}({r}*pi)")


# Polygons

def _polygon(n: int, d: int, scale, settings) -> PrecisionDecimal:
    if n < 3:
        raise ValueError(f"A polygon needs at least 3 sides, got {n}")

    a = RationalAngle(1, n)
    kind = classify(a)
    if kind is ConstructibilityClass.OUT_OF_SCOPE:
        raise UnsupportedError(f"{n} has a prime factor above 5")

    if kind is ConstructibilityClass.SQUARE_ROOTS_ONLY:
        side = tower(a, Trig.SIN, settings)
        e = side if scale == 1 else Product((Literal(scale), side))
        return evaluate(e, d, settings)

    logger.debug("%d-gon is %s, using the angle engine", n, kind.value)
    return engine_decimal(a.ratio, Trig.SIN, d, scale, settings)


def polygon_side(n: int, d: int, settings=None) -> PrecisionDecimal:
    """
    Side 2sin(pi/n) of the regular n-gon inscribed in the unit circle.
    """

    return _polygon(n, d, 1, settings)


def polygon_perimeter(n: int, d: int, settings=None) -> PrecisionDecimal:
    """
    Perimeter 2n*sin(pi/n) of the regular n-gon inscribed in the unit circle; tends to 2pi.
    """

    return _polygon(n, d, n, settings)


def polygon_pi(n: int, d: int, settings=None) -> PrecisionDecimal:
    """
    Half perimeter n*sin(pi/n), the lower bound for pi given by the inscribed n-gon.
    """

    return _polygon(n, d, Fraction(n, 2), settings)
