"""
test_angles.py

Pytest test suite for rational angles, exact trigonometric values, square-root towers and the cosine engine.

Angle requirements to be tested:
- Angles shall be kept in lowest terms and reduced into [0, 2).
- Angles shall be classified by the 3 and 5 parts of their denominator.
- Chebyshev composition chains shall list prime factors outer to inner, small primes first.
- Exact values shall agree numerically with the true sine and cosine.
- Towers for 2sin and 2cos shall be built by the half-angle rules and match the published forms.
- The cosine engine shall enclose cos and sin of any rational multiple of pi, and its inversion
  shall bracket the angle of a doubled cosine.
- Regular polygon sides and perimeters shall be certified; perimeters shall approach 2pi.

Edge cases:
- Angles 0, pi/2 and pi.
- Angles whose sine is rational.
- Non-constructible angles (Unsupported results).

Error handling testing:
- Malformed angle text, zero denominator.
- Tower angles outside (0, pi/2].
- Polygons with fewer than 3 sides or sides with prime factors above 5.

Author: romanus contributors
"""


from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

from romanus.angles import (RationalAngle, Trig, ConstructibilityClass, Unsupported, classify, factor_chain,
                            exact_value, tower, special_angle_table, t2_preimages, zero_tower, cos_sin_pi,
                            invert_double_cos, engine_decimal, polygon_side, polygon_perimeter, polygon_pi)
from romanus.errors import UnsupportedError
from romanus.interval import Interval
from romanus.radical import Literal, Negation, Quotient, Sqrt, PrecisionDecimal, parse, render, evaluate
from romanus.radical import numeric_equal


mpmath.mp.dps = 60


def reference(x, d):
    """
    mpmath value rounded to d digits.
    """

    return PrecisionDecimal.from_fraction(Fraction(mpmath.nstr(x, 55, strip_zeros=False)), d)


def close_to(decimal, x, d):
    return abs(mpmath.mpf(decimal.scaled) / 10 ** d - x) <= mpmath.mpf(10) ** -d


@pytest.fixture(scope="module")
def pi_value():
    return Fraction(Path("tests/fixtures/pi_digits.txt").read_text().strip())


class TestRationalAngle:
    def test_normalization(self):
        assert RationalAngle(5, 2) == RationalAngle(1, 2)
        assert RationalAngle(-1, 4) == RationalAngle(7, 4)
        assert RationalAngle(2, 4) == RationalAngle(1, 2)
        assert RationalAngle(4) == RationalAngle(0)

    def test_text(self):
        a = RationalAngle.from_text("1/675")
        assert (a.p, a.q) == (1, 675)
        assert str(a) == "1/675"
        assert RationalAngle.from_text(" 3/2 ").ratio == Fraction(3, 2)

    def test_malformed(self):
        with pytest.raises(ValueError):
            RationalAngle.from_text("pi/4")
        with pytest.raises(ValueError):
            RationalAngle.from_text("1/0")
        with pytest.raises(ValueError):
            RationalAngle(1, 0)


class TestClassification:
    @pytest.mark.parametrize("q, kind", [
        (8, ConstructibilityClass.SQUARE_ROOTS_ONLY),
        (120, ConstructibilityClass.SQUARE_ROOTS_ONLY),
        (192, ConstructibilityClass.SQUARE_ROOTS_ONLY),
        (9, ConstructibilityClass.NEEDS_CUBIC),
        (600, ConstructibilityClass.NEEDS_QUINTIC),
        (675, ConstructibilityClass.NEEDS_CUBIC_AND_QUINTIC),
        (7, ConstructibilityClass.OUT_OF_SCOPE),
        (1, ConstructibilityClass.SQUARE_ROOTS_ONLY),
    ])
    def test_classify(self, q, kind):
        assert classify(RationalAngle(1, q)) is kind

    def test_classify_accepts_fractions(self):
        assert classify(Fraction(15, 64)) is ConstructibilityClass.SQUARE_ROOTS_ONLY

    @pytest.mark.parametrize("n, chain", [
        (675, [3, 3, 3, 5, 5]),
        (300, [2, 2, 3, 5, 5]),
        (45, [3, 3, 5]),
        (7, [7]),
        (1, []),
    ])
    def test_factor_chain(self, n, chain):
        assert factor_chain(n) == chain

    def test_factor_chain_of_zero(self):
        with pytest.raises(ValueError):
            factor_chain(0)


class TestExactValues:
    def test_special_forms(self):
        assert exact_value(RationalAngle(1, 6), Trig.COS) == parse("sqrt(3)/2")
        assert exact_value(RationalAngle(1, 3), 'sin') == parse("sqrt(3)/2")
        assert exact_value(RationalAngle(1, 5), Trig.COS) == parse("(sqrt(5)+1)/4")
        assert exact_value(RationalAngle(1, 2), Trig.COS) == Literal(0)

    def test_quadrant_signs(self):
        assert exact_value(RationalAngle(7, 6), Trig.SIN) == Negation(Literal(Fraction(1, 2)))
        assert exact_value(RationalAngle(1), Trig.COS) == Negation(Literal(1))
        assert exact_value(RationalAngle(0), Trig.SIN) == Literal(0)

    @pytest.mark.parametrize("p, q", [(1, 15), (7, 30), (1, 12), (11, 24), (3, 40), (5, 3), (7, 4), (13, 60),
                                      (1, 16), (29, 30), (17, 20)])
    def test_against_mpmath(self, p, q):
        angle = mpmath.mpf(p) / q * mpmath.pi
        for which, f in ((Trig.COS, mpmath.cos), (Trig.SIN, mpmath.sin)):
            value = evaluate(exact_value(RationalAngle(p, q), which), 30)
            assert close_to(value, f(angle), 30)

    def test_not_constructible(self):
        result = exact_value(RationalAngle(1, 9), Trig.COS)
        assert isinstance(result, Unsupported)
        assert not result
        assert "NeedsCubic" in result.reason


class TestTowers:
    def test_cosine_towers(self):
        assert tower(RationalAngle(1, 8), Trig.COS) == parse("sqrt(2 + sqrt(2))")
        assert tower(RationalAngle(1, 16), 'cos') == parse("sqrt(2 + sqrt(2 + sqrt(2)))")
        assert tower(RationalAngle(1, 12), Trig.COS) == parse("sqrt(2 + sqrt(3))")

    def test_sine_towers(self):
        assert tower(RationalAngle(1, 8), Trig.SIN) == parse("sqrt(2 - sqrt(2))")
        assert tower(RationalAngle(1, 6), Trig.SIN) == Literal(1)
        assert tower(RationalAngle(1, 4), Trig.SIN) == Sqrt(Literal(2))

    def test_romanus_corrected_root(self):
        e = tower(RationalAngle(1, 192), Trig.SIN)
        assert render(e) == "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3))))))"

    @pytest.mark.parametrize("p, q", [(1, 5), (1, 15), (2, 15), (7, 60), (1, 120), (15, 64), (1, 2)])
    def test_tower_values(self, p, q):
        for which, f in ((Trig.COS, mpmath.cos), (Trig.SIN, mpmath.sin)):
            value = evaluate(tower(RationalAngle(p, q), which), 40)
            assert close_to(value, 2 * f(mpmath.mpf(p) / q * mpmath.pi), 40)

    def test_unsupported_tower(self):
        result = tower(RationalAngle(1, 675), Trig.SIN)
        assert not result
        assert "NeedsCubicAndQuintic" in result.reason

    @pytest.mark.parametrize("r", [Fraction(0), Fraction(3, 4), Fraction(-1, 8)])
    def test_tower_domain(self, r):
        with pytest.raises(ValueError):
            tower(r, Trig.SIN)

    def test_zero_tower(self):
        assert zero_tower(0) == Literal(0)
        assert zero_tower(1) == Sqrt(Literal(Fraction(1, 2)))
        half_tower = Quotient(parse("sqrt(2 + sqrt(2))"), Literal(2))
        assert numeric_equal(zero_tower(2), half_tower, 40)
        with pytest.raises(ValueError):
            zero_tower(-1)

    def test_t2_preimages(self):
        plus, minus = t2_preimages(Literal(0))
        assert plus == Sqrt(Literal(Fraction(1, 2)))
        assert minus == Negation(plus)


class TestHalfAngleProperties:
    @pytest.fixture(scope="class")
    def supported_angles(self):
        angles = []
        for q in range(2, 193):
            for p in range(1, q // 2 + 1):
                a = Fraction(p, q)
                if a.denominator == q and a < Fraction(1, 2) \
                        and classify(a) is ConstructibilityClass.SQUARE_ROOTS_ONLY:
                    angles.append(RationalAngle.from_fraction(a))
        return angles

    def test_half_angle_consistency(self, supported_angles):
        bound = Fraction(1, 10 ** 35)
        for a in supported_angles:
            half = evaluate(tower(RationalAngle(a.p, 2 * a.q), Trig.COS), 40).to_fraction()
            whole = evaluate(tower(a, Trig.COS), 40).to_fraction()
            assert abs(half * half - (2 + whole)) < bound, a

    def test_complement(self, supported_angles):
        for a in supported_angles:
            complement = RationalAngle.from_fraction(Fraction(1, 2) - a.ratio)
            assert numeric_equal(tower(a, Trig.SIN), tower(complement, Trig.COS), 40), a


class TestSpecialAngleTable:
    def test_rows(self):
        table = special_angle_table()
        assert [row[0] for row in table] == list(range(1, 13))

        rows = {n: (c, s) for n, c, s in table}
        for n in (7, 9, 11):
            assert rows[n] == (None, None)

        assert rows[1] == (Literal(1), Literal(0))
        assert rows[4] == (Literal(0), Literal(1))
        assert render(rows[5][0]) == "(sqrt(5) - 1)/4"
        assert render(rows[12][0]) == "sqrt(3)/2"
        assert render(rows[8][1]) == "sqrt(2)/2"

    def test_rows_are_values(self):
        for n, c, s in special_angle_table():
            if c is None:
                continue
            angle = 2 * mpmath.pi / n
            assert close_to(evaluate(c, 40), mpmath.cos(angle), 40)
            assert close_to(evaluate(s, 40), mpmath.sin(angle), 40)


class TestCosineEngine:
    @pytest.mark.parametrize("r", [Fraction(1, 3), Fraction(1, 7), Fraction(5, 4), Fraction(-2, 9),
                                   Fraction(1, 675), Fraction(99, 100)])
    def test_enclosures(self, r):
        c, s = cos_sin_pi(r, 150)
        assert c.width < Fraction(1, 2 ** 140)
        x = mpmath.mpf(r.numerator) / r.denominator * mpmath.pi
        for iv, ref in ((c, mpmath.cos(x)), (s, mpmath.sin(x))):
            lo = mpmath.mpf(iv.lower.numerator) / iv.lower.denominator
            hi = mpmath.mpf(iv.upper.numerator) / iv.upper.denominator
            assert lo <= ref <= hi

    def test_exact_points(self):
        c, s = cos_sin_pi(Fraction(1, 3), 100)
        assert c.contains(Fraction(1, 2))
        c, s = cos_sin_pi(Fraction(1, 2), 100)
        assert c.contains(0) and s.contains(1)

    @pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(1, 7), Fraction(3, 64), Fraction(9, 10)])
    def test_inversion_brackets_angle(self, t):
        b = cos_sin_pi(t, 200)[0] * 2
        lo, hi = invert_double_cos(b, 200)
        assert lo <= t <= hi
        assert hi - lo < Fraction(1, 2 ** 150)

    def test_inversion_of_decimal_window(self):
        # b known only to +-1e-40
        t = Fraction(2, 7)
        b = (cos_sin_pi(t, 200)[0] * 2).widen(Fraction(1, 10 ** 40))
        lo, hi = invert_double_cos(b, 100)
        assert lo <= t <= hi
        assert hi - lo < Fraction(1, 10 ** 25)

    def test_inversion_of_exact_values(self):
        assert invert_double_cos(Fraction(0), 100) == (Fraction(1, 2), Fraction(1, 2))
        lo, hi = invert_double_cos(Fraction(1), 100)
        assert lo <= Fraction(1, 3) <= hi
        lo, hi = invert_double_cos(Fraction(-2), 100)
        assert lo <= 1 <= hi

    def test_engine_decimal(self):
        value = engine_decimal(Fraction(1, 675), Trig.SIN, 30)
        assert close_to(value, 2 * mpmath.sin(mpmath.pi / 675), 30)
        value = engine_decimal(Fraction(1, 9), 'cos', 20, scale=3)
        assert close_to(value, 6 * mpmath.cos(mpmath.pi / 9), 20)


class TestPolygons:
    def test_hexagon_side(self):
        assert str(polygon_side(6, 10)) == "1.0000000000"

    def test_square_perimeter(self):
        assert str(polygon_perimeter(4, 20)) == "5.65685424949238019521"

    def test_96_gon(self):
        value = polygon_perimeter(96, 20)
        assert value == reference(192 * mpmath.sin(mpmath.pi / 96), 20)

    def test_engine_polygon(self):
        value = polygon_perimeter(9, 25)
        assert close_to(value, 18 * mpmath.sin(mpmath.pi / 9), 25)

    def test_perimeters_increase_towards_two_pi(self, pi_value):
        values = [polygon_perimeter(n, 20).to_fraction() for n in (6, 12, 24, 48, 96, 192, 384)]
        assert all(a < b for a, b in zip(values, values[1:]))
        assert all(v < 2 * pi_value for v in values)

    def test_archimedes_bound(self, pi_value):
        estimate = polygon_pi(3 * 2 ** 17, 30).to_fraction()
        gap = pi_value - estimate
        assert Fraction(3, 10 ** 11) < gap < Fraction(4, 10 ** 11)

    def test_too_few_sides(self):
        with pytest.raises(ValueError):
            polygon_side(2, 10)

    def test_unsupported_prime(self):
        with pytest.raises(UnsupportedError):
            polygon_perimeter(7, 10)

    def test_interval_type(self):
        assert isinstance(cos_sin_pi(Fraction(1, 5), 40)[0], Interval)
