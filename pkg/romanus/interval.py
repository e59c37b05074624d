"""
Rigorous interval arithmetic source: interval.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License

An interval is a pair of integers [lo, hi] read at a binary scale 2**-bits, so both
endpoints are exact dyadic rationals. Every operation rounds the lower endpoint down
and the upper endpoint up, hence the true value of any computation stays enclosed.
"""

from fractions import Fraction
from math import isqrt


class IntervalError(ArithmeticError):
    """
    Base class of interval failures.
    """


class StraddlesZero(IntervalError):
    """
    The sign needed by an operation cannot be decided at the current precision.
    """


class NegativeRadicand(IntervalError):
    """
    Square root of an interval lying entirely below zero.
    """


def digits_to_bits(digits: int) -> int:
    """
    Number of bits carrying at least 'digits' decimal digits (log2(10) < 3.322).
    """

    return (digits * 3322 + 999) // 1000 + 1


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ceil_shift(a: int, bits: int) -> int:
    return -((-a) >> bits)


def _ceil_isqrt(n: int) -> int:
    s = isqrt(n)
    return s if s * s == n else s + 1


class Interval:
    """
    This class represents a closed interval with dyadic endpoints lo/2**bits and hi/2**bits.
    """

    __slots__ = ('_lo', '_hi', '_bits')

    def __init__(self, lo: int, hi: int, bits: int):
        if lo > hi:
            raise ValueError(f"Empty interval [{lo}, {hi}]")
        if bits < 0:
            raise ValueError("Interval scale must be nonnegative")

        self._lo = lo
        self._hi = hi
        self._bits = bits

    @classmethod
    def from_fraction(cls, value, bits: int):
        """
        Tightest enclosure of a rational at the given scale.
        :param value: int or Fraction.
        :param bits: binary scale.
        :return: Interval.
        """

        value = Fraction(value)
        num = value.numerator << bits
        den = value.denominator
        return cls(num // den, _ceil_div(num, den), bits)

    @classmethod
    def hull(cls, *intervals):
        """
        Smallest interval holding every argument (all rebased to the finest scale).
        """

        bits = max(iv.bits for iv in intervals)
        rebased = [iv.rebase(bits) for iv in intervals]
        return cls(min(iv.lo for iv in rebased), max(iv.hi for iv in rebased), bits)

    def __repr__(self):
        return f"Interval({self._lo}, {self._hi}, {self._bits})"

    def __str__(self):
        return f"[{float(self.lower)!r}, {float(self.upper)!r}]"

    @property
    def lo(self):
        return self._lo

    @property
    def hi(self):
        return self._hi

    @property
    def bits(self):
        return self._bits

    @property
    def lower(self) -> Fraction:
        return Fraction(self._lo, 1 << self._bits)

    @property
    def upper(self) -> Fraction:
        return Fraction(self._hi, 1 << self._bits)

    @property
    def width(self) -> Fraction:
        return Fraction(self._hi - self._lo, 1 << self._bits)

    @property
    def midpoint(self) -> Fraction:
        return Fraction(self._lo + self._hi, 1 << (self._bits + 1))

    def is_point(self) -> bool:
        return self._lo == self._hi

    def is_positive(self) -> bool:
        return self._lo > 0

    def is_negative(self) -> bool:
        return self._hi < 0

    def contains_zero(self) -> bool:
        return self._lo <= 0 <= self._hi

    def contains(self, value) -> bool:
        return self.lower <= Fraction(value) <= self.upper

    def magnitude(self) -> Fraction:
        """
        Upper bound of |x| over the interval.
        """

        return Fraction(max(abs(self._lo), abs(self._hi)), 1 << self._bits)

    def mignitude(self) -> Fraction:
        """
        Lower bound of |x| over the interval.
        """

        if self.contains_zero():
            return Fraction(0)
        return Fraction(min(abs(self._lo), abs(self._hi)), 1 << self._bits)

    def rebase(self, bits: int):
        """
        Same interval at another scale; coarsening rounds outwards.
        """

        if bits == self._bits:
            return self
        if bits > self._bits:
            shift = bits - self._bits
            return Interval(self._lo << shift, self._hi << shift, bits)

        shift = self._bits - bits
        return Interval(self._lo >> shift, _ceil_shift(self._hi, shift), bits)

    def widen(self, amount):
        """
        Enlarge both ends by a nonnegative rational amount.
        """

        amount = Fraction(amount)
        if amount < 0:
            raise ValueError("Cannot widen by a negative amount")

        units = _ceil_div(amount.numerator << self._bits, amount.denominator)
        return Interval(self._lo - units, self._hi + units, self._bits)

    def _coerce(self, other):
        if isinstance(other, Interval):
            bits = max(self._bits, other.bits)
            return self.rebase(bits), other.rebase(bits)
        if isinstance(other, (int, Fraction)):
            return self, Interval.from_fraction(other, self._bits)
        return None, None

    def __neg__(self):
        return Interval(-self._hi, -self._lo, self._bits)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Interval(a.lo + b.lo, a.hi + b.hi, a.bits)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Interval(a.lo - b.hi, a.hi - b.lo, a.bits)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b - a

    def __mul__(self, other):
        if isinstance(other, int):
            if other >= 0:
                return Interval(self._lo * other, self._hi * other, self._bits)
            return Interval(self._hi * other, self._lo * other, self._bits)

        a, b = self._coerce(other)
        if a is None:
            return NotImplemented

        products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
        return Interval(min(products) >> a.bits, _ceil_shift(max(products), a.bits), a.bits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented

        if b.contains_zero():
            if b.lo == b.hi == 0:
                raise ZeroDivisionError("Interval division by exact zero")
            raise StraddlesZero("Denominator interval contains zero")

        floors = []
        ceils = []
        for x in (a.lo << a.bits, a.hi << a.bits):
            for y in (b.lo, b.hi):
                floors.append(x // y)
                ceils.append(_ceil_div(x, y))

        return Interval(min(floors), max(ceils), a.bits)

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b / a

    def square(self):
        """
        Enclosure of x**2, tighter than x*x when the interval contains zero.
        """

        lo, hi = abs(self._lo), abs(self._hi)
        if self.contains_zero():
            return Interval(0, _ceil_shift(max(lo, hi) ** 2, self._bits), self._bits)

        small, big = min(lo, hi), max(lo, hi)
        return Interval((small * small) >> self._bits, _ceil_shift(big * big, self._bits), self._bits)

    def sqrt(self):
        """
        Enclosure of the square root.
            Raises NegativeRadicand when the interval is certainly negative and
            StraddlesZero when it reaches below zero without being certainly negative.
        """

        if self._hi < 0:
            raise NegativeRadicand("Square root of a negative interval")
        if self._lo < 0:
            raise StraddlesZero("Square root of an interval reaching below zero")

        return Interval(isqrt(self._lo << self._bits), _ceil_isqrt(self._hi << self._bits), self._bits)
