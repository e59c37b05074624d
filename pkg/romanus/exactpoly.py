"""
Exact integer polynomial algebra source: exactpoly.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License

Dense univariate polynomials with Python integer coefficients and the Chebyshev
generators T_n(x) and V_n(x) = 2 T_n(x/2).
"""

from fractions import Fraction
from functools import lru_cache

from .interval import Interval


class Polynomial:
    """
    This class represents an immutable dense polynomial; coeffs[i] is the coefficient of x**i.
    The zero polynomial is stored as (0,) and has degree 0.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=(0,)):
        coeffs = list(coeffs) or [0]
        if any(not isinstance(c, int) for c in coeffs):
            raise TypeError("Polynomial coefficients must be integers")

        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()

        self._coeffs = tuple(coeffs)

    @classmethod
    def from_terms(cls, terms: dict):
        """
        Build from an {exponent: coefficient} mapping; missing exponents are zero.
        """

        if any(e < 0 for e in terms):
            raise ValueError("Negative exponent in polynomial term")
        if not terms:
            return cls()

        coeffs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            coeffs[e] += c
        return cls(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1):
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def leading(self):
        return self._coeffs[-1]

    def is_zero(self):
        return self._coeffs == (0,)

    def terms(self):
        """
        Nonzero (exponent, coefficient) pairs in ascending powers.
        """

        return [(e, c) for e, c in enumerate(self._coeffs) if c]

    def __repr__(self):
        return f"Polynomial({list(self._coeffs)})"

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented

        size = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (size - len(self._coeffs))
        b = other._coeffs + (0,) * (size - len(other._coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial([c * other for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented

        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1):
        """
        Multiply by x**k.
        """

        if self.is_zero():
            return self
        return Polynomial((0,) * k + self._coeffs)

    def __call__(self, x):
        if isinstance(x, Interval):
            return eval_interval(self, x)
        return eval_exact(self, x)


X = Polynomial([0, 1])


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> Polynomial:
    """
    Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
    :param n: nonnegative degree.
    :return: T_n with exact integer coefficients.
    """

    if n < 0:
        raise ValueError(f"Chebyshev degree must be nonnegative, got {n}")

    prev, cur = Polynomial([1]), X
    if n == 0:
        return prev

    for _ in range(n - 1):
        prev, cur = cur, cur.shift() * 2 - prev

    return cur


@lru_cache(maxsize=None)
def monic_cheb(n: int) -> Polynomial:
    """
    Monic variant V_n(x) = 2 T_n(x/2), V_0 = 2, V_1 = x, V_{n+1} = x V_n - V_{n-1}.
    :param n: nonnegative degree.
    :return: V_n with exact integer coefficients.
    """

    if n < 0:
        raise ValueError(f"Chebyshev degree must be nonnegative, got {n}")

    prev, cur = Polynomial([2]), X
    if n == 0:
        return prev

    for _ in range(n - 1):
        prev, cur = cur, cur.shift() - prev

    return cur


def monic_from_T(p: Polynomial) -> Polynomial:
    """
    Exact 2 p(x/2), for polynomials where it has integer coefficients.
    """

    coeffs = []
    for i, c in enumerate(p.coeffs):
        value = Fraction(2 * c, 1 << i)
        if value.denominator != 1:
            raise ValueError(f"2 p(x/2) has a non-integer coefficient at x^{i}")
        coeffs.append(value.numerator)

    return Polynomial(coeffs)


def compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    p(q(x)) by Horner's scheme over polynomials.
    """

    result = Polynomial([p.coeffs[-1]])
    for c in reversed(p.coeffs[:-1]):
        result = result * q + c

    return result


def compose_chain(chain) -> Polynomial:
    """
    T_{c0}(T_{c1}(...T_{ck}(x))) for a chain listed outer to inner; the empty chain is x.
    """

    result = X
    for c in reversed(list(chain)):
        result = compose(chebyshev_T(c), result)

    return result


def eval_exact(p: Polynomial, r) -> Fraction:
    """
    Exact value at a rational point, fully reduced.
    :param p: polynomial.
    :param r: int, Fraction or a string such as '1/2'.
    :return: Fraction.
    """

    r = Fraction(r)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * r + c

    return acc


def eval_interval(p: Polynomial, x: Interval) -> Interval:
    """
    Enclosure of p over an interval, by Horner's scheme in interval arithmetic.
    """

    acc = Interval.from_fraction(p.coeffs[-1], x.bits)
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c

    return acc


def horner_guard_bits(p: Polynomial, radius: int = 2) -> int:
    """
    Extra bits lost by interval Horner evaluation on [-radius, radius]:
    the bit length of sum(|c_i| * i * radius**i).
    """

    bound = sum(abs(c) * max(i, 1) * radius ** i for i, c in enumerate(p.coeffs))
    return bound.bit_length() + 4
