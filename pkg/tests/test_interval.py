"""
test_interval.py

Pytest test suite for dyadic interval arithmetic.

Interval requirements to be tested:
- Rationals shall be enclosed by the tightest interval at the requested binary scale.
- Every operation shall enclose the exact result of the operation on any enclosed values.
- Rebasing to a coarser scale shall round outwards; to a finer scale it shall be exact.
- Square roots shall be enclosed from below and above.
- Sign queries shall only answer when the sign is certain.

Edge cases:
- Point intervals.
- Intervals containing zero (squares, magnitudes).

Error handling testing:
- Empty interval.
- Square root of a negative or straddling interval.
- Division by an exact zero or by an interval containing zero.

Author: romanus contributors
"""


from fractions import Fraction

import mpmath
import pytest

from romanus.interval import (Interval, IntervalError, NegativeRadicand, StraddlesZero,
                              digits_to_bits)


BITS = 100


def enclosure(value):
    return Interval.from_fraction(value, BITS)


class TestConstruction:
    def test_exact_dyadic_is_point(self):
        iv = enclosure(Fraction(3, 8))
        assert iv.is_point()
        assert iv.lower == iv.upper == Fraction(3, 8)

    def test_third_is_tight(self):
        iv = enclosure(Fraction(1, 3))
        assert iv.lower < Fraction(1, 3) < iv.upper
        assert iv.width == Fraction(1, 2 ** BITS)

    def test_negative_value(self):
        iv = enclosure(Fraction(-2, 3))
        assert iv.is_negative()
        assert iv.contains(Fraction(-2, 3))

    def test_empty_interval(self):
        with pytest.raises(ValueError):
            Interval(3, 2, 10)

    def test_hull(self):
        iv = Interval.hull(enclosure(1), Interval.from_fraction(Fraction(-1, 2), 4))
        assert iv.lower == Fraction(-1, 2)
        assert iv.upper == 1
        assert iv.bits == BITS

    @pytest.mark.parametrize("digits", [1, 15, 30, 100])
    def test_digits_to_bits(self, digits):
        assert 2 ** digits_to_bits(digits) >= 10 ** digits


class TestArithmetic:
    @pytest.mark.parametrize("a, b", [
        (Fraction(1, 3), Fraction(2, 7)),
        (Fraction(-5, 9), Fraction(11, 13)),
        (Fraction(-1, 3), Fraction(-1, 6)),
    ])
    def test_enclosure(self, a, b):
        x, y = enclosure(a), enclosure(b)
        assert (x + y).contains(a + b)
        assert (x - y).contains(a - b)
        assert (x * y).contains(a * b)
        assert (x / y).contains(a / b)
        assert (-x).contains(-a)

    def test_mixed_with_rationals(self):
        x = enclosure(Fraction(1, 3))
        assert (x + 1).contains(Fraction(4, 3))
        assert (1 - x).contains(Fraction(2, 3))
        assert (x * Fraction(3, 2)).contains(Fraction(1, 2))
        assert (x * -3).contains(-1)
        assert (2 / x).contains(6)

    def test_square_of_straddling_interval(self):
        iv = Interval.from_fraction(-1, 4).widen(Fraction(3, 2))
        sq = iv.square()
        assert sq.lower == 0
        assert sq.contains(Fraction(25, 4))
        assert (iv * iv).lower < 0

    def test_square_root_enclosure(self):
        mpmath.mp.dps = 50
        root = enclosure(2).sqrt()
        assert root.lower ** 2 <= 2 <= root.upper ** 2
        assert root.width <= Fraction(2, 2 ** BITS)
        reference = mpmath.sqrt(2)
        assert mpmath.mpf(root.lower.numerator) / root.lower.denominator <= reference

    def test_rebase(self):
        x = enclosure(Fraction(1, 3))
        coarse = x.rebase(10)
        assert coarse.contains(Fraction(1, 3))
        assert coarse.lower <= x.lower and x.upper <= coarse.upper
        assert x.rebase(BITS + 20).lower == x.lower

    def test_widen(self):
        iv = enclosure(1).widen(Fraction(1, 4))
        assert iv.lower == Fraction(3, 4)
        assert iv.upper == Fraction(5, 4)
        with pytest.raises(ValueError):
            iv.widen(-1)


class TestSigns:
    def test_magnitude_and_mignitude(self):
        iv = Interval.from_fraction(Fraction(-3, 4), 8).widen(Fraction(1, 4))
        assert iv.magnitude() == 1
        assert iv.mignitude() == Fraction(1, 2)

        straddling = enclosure(0).widen(Fraction(1, 8))
        assert straddling.contains_zero()
        assert straddling.mignitude() == 0
        assert not straddling.is_positive()
        assert not straddling.is_negative()

    def test_midpoint(self):
        iv = Interval.from_fraction(0, 2).widen(Fraction(1, 2))
        assert iv.midpoint == 0


class TestErrors:
    def test_negative_radicand(self):
        with pytest.raises(NegativeRadicand):
            enclosure(-1).sqrt()

    def test_straddling_radicand(self):
        with pytest.raises(StraddlesZero):
            enclosure(0).widen(Fraction(1, 1000)).sqrt()

    def test_division_by_exact_zero(self):
        with pytest.raises(ZeroDivisionError):
            enclosure(1) / enclosure(0)

    def test_division_by_straddling_interval(self):
        with pytest.raises(StraddlesZero):
            enclosure(1) / enclosure(0).widen(Fraction(1, 8))

    def test_error_hierarchy(self):
        assert issubclass(StraddlesZero, IntervalError)
        assert issubclass(NegativeRadicand, ArithmeticError)
