"""
test_notation.py

Pytest test suite for the modern, Stevin and Viete polynomial notations.

Notation requirements to be tested:
- Each dialect shall be parsed into an exact integer polynomial; like terms shall be added.
- Printing shall list terms in ascending powers with ' + ' / ' - ' separators.
- Viete letter codes shall combine N, Q and C (Q's before C's).
- Converting between dialects shall preserve the polynomial.
- The degree 45 polynomial shall print exactly as its published Stevin form.
- Random polynomials of degree up to 50 shall survive printing and parsing in every dialect.

Edge cases:
- Leading minus sign, unit coefficients, constant terms.
- The zero polynomial.
- Terms written in descending order.

Error handling testing:
- Unknown Viete letters, 'N' combined with other letters.
- Constant terms and zero in Viete notation.
- Malformed terms (with the offending offset).

Author: romanus contributors
"""


import random
from pathlib import Path

import pytest

from romanus.errors import ParseError, UnsupportedDialect, UnsupportedError
from romanus.exactpoly import Polynomial, chebyshev_T, monic_cheb
from romanus.notation import NotationDialect, viete_code, parse_poly, print_poly, convert


def random_polynomial(rng, constant=True):
    degree = rng.randint(1, 50)
    coeffs = [rng.choice((0, rng.randint(-10 ** 6, 10 ** 6), rng.choice((1, -1)))) for _ in range(degree)]
    coeffs.append(rng.choice((1, -1)) * rng.randint(1, 10 ** 6))
    if not constant:
        coeffs[0] = 0
    return Polynomial(coeffs)


@pytest.fixture(scope="module")
def stevin_45():
    return Path("tests/fixtures/monic_cheb_45.stevin").read_text().strip()


class TestVieteCodes:
    @pytest.mark.parametrize("e, code", [(1, "N"), (2, "Q"), (3, "C"), (4, "QQ"), (5, "QC"), (6, "CC"),
                                         (7, "QQC"), (8, "QCC"), (9, "CCC")])
    def test_codes(self, e, code):
        assert viete_code(e) == code

    def test_codes_parse_back(self):
        for e in range(1, 46):
            assert parse_poly(f"1{viete_code(e)}", 'viete') == Polynomial.monomial(e)

    def test_no_code_for_constants(self):
        with pytest.raises(UnsupportedDialect):
            viete_code(0)


class TestParse:
    def test_modern(self):
        assert parse_poly("5x - 5x^3 + x^5", 'modern') == monic_cheb(5)
        assert parse_poly("-1 + 2x^2", NotationDialect.MODERN) == chebyshev_T(2)

    def test_stevin(self):
        assert parse_poly("5(1) - 5(3) + 1(5)", 'stevin') == monic_cheb(5)
        assert parse_poly("2(2) - 1", 'stevin') == chebyshev_T(2)

    def test_viete(self):
        assert parse_poly("5N - 5C + 1QC", 'viete') == monic_cheb(5)
        assert parse_poly("1QC - 5C + 5N", 'viete') == monic_cheb(5)

    def test_like_terms_added(self):
        assert parse_poly("x + 2x - x^2 + x^2", 'modern') == Polynomial([0, 3])

    def test_leading_plus(self):
        assert parse_poly("+3x", 'modern') == Polynomial([0, 3])

    def test_stevin_45(self, stevin_45):
        assert parse_poly(stevin_45, 'stevin') == monic_cheb(45)

    def test_unknown_letter(self):
        with pytest.raises(ParseError) as exc_info:
            parse_poly("5N - 5QZ", 'viete')
        assert exc_info.value.offset == 7

    def test_n_combined(self):
        with pytest.raises(ParseError):
            parse_poly("3NQ", 'viete')

    def test_viete_needs_letters(self):
        with pytest.raises(ParseError):
            parse_poly("5N + 3", 'viete')

    def test_modern_wrong_variable(self):
        with pytest.raises(ParseError) as exc_info:
            parse_poly("3y", 'modern')
        assert exc_info.value.offset == 1

    def test_dangling_operator(self):
        with pytest.raises(ParseError):
            parse_poly("5(1) -", 'stevin')

    def test_unknown_dialect(self):
        with pytest.raises(ValueError):
            parse_poly("x", 'latin')


class TestPrint:
    def test_modern(self):
        assert print_poly(monic_cheb(5), 'modern') == "5x - 5x^3 + x^5"
        assert print_poly(chebyshev_T(2), 'modern') == "-1 + 2x^2"

    def test_stevin(self, stevin_45):
        assert print_poly(monic_cheb(45), 'stevin') == stevin_45
        assert print_poly(chebyshev_T(4), 'stevin') == "1 - 8(2) + 8(4)"

    def test_viete(self):
        assert print_poly(monic_cheb(5), 'viete') == "5N - 5C + 1QC"
        assert print_poly(-monic_cheb(3), 'viete') == "3N - 1C"

    def test_zero(self):
        assert print_poly(Polynomial(), 'modern') == "0"
        assert print_poly(Polynomial(), 'stevin') == "0"

    def test_viete_constant_term(self):
        with pytest.raises(UnsupportedDialect):
            print_poly(chebyshev_T(2), 'viete')
        with pytest.raises(UnsupportedError):
            print_poly(Polynomial(), 'viete')


class TestConvert:
    def test_modern_to_viete(self):
        assert convert("5x - 5x^3 + x^5", 'modern', 'viete') == "5N - 5C + 1QC"

    def test_viete_to_stevin(self):
        assert convert("1QC - 5C + 5N", 'viete', 'stevin') == "5(1) - 5(3) + 1(5)"

    def test_viete_nine(self):
        assert convert("9(1) - 30(3) + 27(5) - 9(7) + 1(9)", 'stevin', 'viete') == "9N - 30C + 27QC - 9QQC + 1CCC"
        assert parse_poly("9N - 30C + 27QC - 9QQC + 1CCC", 'viete') == monic_cheb(9)

    @pytest.mark.parametrize("n", [1, 3, 9, 45])
    def test_conversions_preserve_polynomial(self, n):
        text = print_poly(monic_cheb(n), 'modern')
        for target in NotationDialect:
            converted = convert(text, 'modern', target)
            assert parse_poly(converted, target) == monic_cheb(n)


class TestRandomRoundTrips:
    @pytest.mark.parametrize("dialect", list(NotationDialect))
    def test_round_trip(self, dialect):
        rng = random.Random(f"round-trip-{dialect.value}")
        constant = dialect is not NotationDialect.VIETE
        for _ in range(500):
            p = random_polynomial(rng, constant)
            assert parse_poly(print_poly(p, dialect), dialect) == p

    def test_modern_stevin_viete_modern(self):
        rng = random.Random(1593)
        for _ in range(100):
            text = print_poly(random_polynomial(rng, constant=False), 'modern')
            stevin = convert(text, 'modern', 'stevin')
            viete = convert(stevin, 'stevin', 'viete')
            assert convert(viete, 'viete', 'modern') == text
