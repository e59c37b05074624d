"""
Chebyshev equation solver source: solver.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License

Solves 2T_n(x/2) = b by recognizing b as 2sin(p*pi/q) and reading off every root from the
cosine parametrization, audits the four problems Romanus posed with the degree 45 equation
and solves the five equation system of the 1639 new year's gift.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger

from .angles import (RationalAngle, Trig, ConstructibilityClass, classify, tower,
                     cos_sin_pi, invert_double_cos, engine_decimal)
from .config import load_settings
from .errors import RangeError, RecognitionError, RomanusError, UndecidableSign
from .exactpoly import Polynomial, monic_cheb, eval_interval, horner_guard_bits
from .interval import Interval, digits_to_bits
from .radical import (RadicalExpr, Literal, Negation, PrecisionDecimal, parse, render,
                      enclose, evaluate, numeric_equal, rational_value, certify)

logger = getLogger(__name__)

HALF = Fraction(1, 2)

# Right-hand sides and claimed solutions of the degree 45 problems
ROMANUS_PROBLEMS = {
    '1': {
        'rhs': "sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))",
        'claimed': "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3)))))",
    },
    '2': {
        'rhs': "sqrt(2 + sqrt(2 - sqrt(2 - sqrt(2 - sqrt(2 - sqrt(2))))))",
        'claimed': "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3))))))",
        'proposed': "sqrt(2 - sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))))",
        'corrected': "sqrt(2 - sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2)))))",
    },
    '3': {
        'rhs': "sqrt(2 + sqrt(2))",
        'claimed': "sqrt(2 - sqrt(2 + sqrt(3/16) + sqrt(15/16) + sqrt(5/8 - sqrt(5/64))))",
    },
    'main': {
        'rhs': "sqrt(7/4 - sqrt(5/16) - sqrt(15/8 - sqrt(45/64)))",
        'claimed_angle': "1/675",
    },
}

ROMANUS_DEGREE = 45


def _check_digits(d: int):
    if d < 1:
        raise ValueError(f"Requested digits must be positive, got {d}")


def _reduce_unit(r: Fraction) -> Fraction:
    """
    The s in [0, 1] with cos(s*pi) = cos(r*pi).
    """

    r %= 2
    return 2 - r if r > 1 else r


@dataclass(frozen=True)
class ChebEquation:
    """
    The equation 2T_n(x/2) = rhs.
    """

    n: int
    rhs: object

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Equation degree must be positive, got {self.n}")
        if not isinstance(self.rhs, (RadicalExpr, PrecisionDecimal)):
            raise TypeError("Right-hand side must be a RadicalExpr or a PrecisionDecimal")

    @property
    def polynomial(self) -> Polynomial:
        return monic_cheb(self.n)

    def exact_rhs(self):
        """
        Rational value of the right-hand side when known exactly, else None.
        """

        if isinstance(self.rhs, PrecisionDecimal):
            return self.rhs.to_fraction()
        return rational_value(self.rhs)

    def rhs_enclosure(self, bits: int, settings=None) -> Interval:
        if isinstance(self.rhs, PrecisionDecimal):
            return Interval.from_fraction(self.rhs.to_fraction(), bits)
        return enclose(self.rhs, bits, settings)

    def rhs_text(self) -> str:
        return str(self.rhs)


@dataclass(frozen=True)
class Solution:
    """
    A root x = 2sin(angle); angle and radical are None for purely numeric roots.
    """

    angle: RationalAngle
    radical: RadicalExpr
    value: PrecisionDecimal
    multiplicity: int = 1
    residual: Fraction = field(default=None, compare=False)

    @property
    def classification(self):
        return None if self.angle is None else classify(self.angle)

    def to_dict(self) -> dict:
        return {
            'angle': None if self.angle is None else str(self.angle),
            'radical': None if self.radical is None else render(self.radical),
            'value': str(self.value),
            'multiplicity': self.multiplicity,
        }


@dataclass(frozen=True)
class SolutionSet:
    """
    All real roots in ascending order with multiplicities.

    Attributes:
        positive_count, negative_count: roots of each sign, counted with multiplicity.
        smallest_positive: index of the smallest positive root, None when there is none.
    """

    solutions: tuple
    positive_count: int = field(init=False)
    negative_count: int = field(init=False)
    smallest_positive: int = field(init=False)

    def __post_init__(self):
        solutions = tuple(self.solutions)
        object.__setattr__(self, 'solutions', solutions)
        object.__setattr__(self, 'positive_count',
                           sum(s.multiplicity for s in solutions if s.value.sign() > 0))
        object.__setattr__(self, 'negative_count',
                           sum(s.multiplicity for s in solutions if s.value.sign() < 0))

        index = next((i for i, s in enumerate(solutions) if s.value.sign() > 0), None)
        object.__setattr__(self, 'smallest_positive', index)

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __getitem__(self, item):
        return self.solutions[item]

    @property
    def total_multiplicity(self):
        return sum(s.multiplicity for s in self.solutions)

    @property
    def smallest(self) -> Solution:
        if self.smallest_positive is None:
            return None
        return self.solutions[self.smallest_positive]

    def positive(self) -> list:
        return [s for s in self.solutions if s.value.sign() > 0]

    def to_dict(self) -> dict:
        return {
            'solutions': [s.to_dict() for s in self.solutions],
            'positive_count': self.positive_count,
            'negative_count': self.negative_count,
            'smallest_positive': self.smallest_positive,
        }


@dataclass(frozen=True)
class AuditCheck:
    """
    One comparison of an audit: 'lhs' against 'rhs', both as decimals or radical text.
    """

    name: str
    lhs: str
    rhs: str
    agrees: bool

    def to_dict(self) -> dict:
        return {'name': self.name, 'lhs': self.lhs, 'rhs': self.rhs, 'agrees': self.agrees}


@dataclass(frozen=True)
class AuditReport:
    example: str
    status: str
    checks: tuple
    solution: Solution = None
    classification: ConstructibilityClass = None
    description: str = ""

    def to_dict(self) -> dict:
        return {
            'example': self.example,
            'status': self.status,
            'checks': [c.to_dict() for c in self.checks],
            'solution': None if self.solution is None else self.solution.to_dict(),
            'classification': None if self.classification is None else self.classification.value,
            'description': self.description,
        }


@dataclass(frozen=True)
class GiftSolution:
    """
    The geometric solution A = 2sin(pi/120), B = 2sin(pi/24), C = 2sin(pi/8), D = 2cos(pi/8)
    and E = 2sin(pi/600); 'residuals' maps each equation to a certified bound.
    """

    A: Solution
    B: Solution
    C: Solution
    D: Solution
    E: Solution
    residuals: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        out = {name: getattr(self, name).to_dict() for name in "ABCDE"}
        out['residuals'] = {k: f"{float(v):.3e}" for k, v in self.residuals.items()}
        return out


# Angle recognition

def _convergents(x: Fraction, max_q: int):
    """
    Continued fraction convergents of x with denominator at most max_q, increasing q.
    """

    h0, h1 = 0, 1
    k0, k1 = 1, 0
    num, den = x.numerator, x.denominator

    while den:
        a, rem = divmod(num, den)
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > max_q:
            return
        yield Fraction(h1, k1)
        num, den = den, rem


def _double_sin_enclosure(a: Fraction, bits: int, settings) -> Interval:
    """
    2sin(a*pi) from its tower when one exists, from the angle engine otherwise.
    """

    magnitude = abs(a)
    if 0 < magnitude <= HALF and classify(magnitude) is ConstructibilityClass.SQUARE_ROOTS_ONLY:
        iv = enclose(tower(magnitude, Trig.SIN, settings), bits, settings)
        return -iv if a < 0 else iv
    return cos_sin_pi(a, bits)[1] * 2


def _check_range(b: Interval):
    if b.lower > 2 or b.upper < -2:
        raise RangeError(f"Right-hand side {b} lies outside [-2, 2]")


def _rhs_interval(b, bits: int, settings) -> Interval:
    if isinstance(b, PrecisionDecimal):
        # the true value lies within one unit of the last printed digit
        return Interval.hull(Interval.from_fraction(b.lower(), bits), Interval.from_fraction(b.upper(), bits))
    if isinstance(b, Interval):
        return b.rebase(bits)
    return enclose(b, bits, settings)


def recognize_angle(b, max_q: int = None, settings=None):
    """
    Rational p/q with b = 2sin(p*pi/q), q <= max_q.
        A certified bracket of the angle feeds a continued fraction expansion; each convergent
        inside the bracket is confirmed by comparing its certified value with b at elevated
        precision.
    :param b: RadicalExpr or PrecisionDecimal in [-2, 2].
    :param max_q: largest denominator tried, defaults to the max_q setting.
    :return: RationalAngle, or None when no candidate is confirmed.
    :raises RangeError: when |b| > 2 is certain.
    """

    settings = settings or load_settings()
    max_q = max_q or settings.max_q
    if max_q < 2:
        raise ValueError(f"max_q must be at least 2, got {max_q}")

    d0 = settings.recognition_digits
    bits = digits_to_bits(d0)
    tolerance = Fraction(1, 10 ** (d0 // 2))

    for _ in range(settings.refine_limit + 1):
        bv = _rhs_interval(b, bits, settings)
        _check_range(bv)
        lo, hi = invert_double_cos(bv, bits)
        if hi - lo <= tolerance:
            break
        if isinstance(b, PrecisionDecimal):
            logger.debug("%s has too few digits to bracket an angle", b)
            return None
        logger.debug("Inversion bracket too wide at %d bits, refining", bits)
        bits *= 2
    else:
        logger.warning("Could not bracket the angle of %s", b)
        return None

    # b = 2cos(t*pi) = 2sin(a*pi) with a = 1/2 - t
    a_lo, a_hi = HALF - hi, HALF - lo
    mid = (a_lo + a_hi) / 2
    sign = -1 if mid < 0 else 1

    # a decimal is matched against its own error window, an exact value against a tight bound
    windowed = isinstance(b, PrecisionDecimal)
    confirm_digits = d0 + settings.confirm_digits
    if windowed:
        confirm_digits = min(confirm_digits, b.guaranteed_digits + 5)
    confirm_bits = digits_to_bits(confirm_digits + 5)
    bound = Fraction(1, 10 ** confirm_digits)
    target = _rhs_interval(b, confirm_bits, settings)

    for cand in _convergents(abs(mid), max_q):
        cand *= sign
        if not a_lo <= cand <= a_hi:
            continue

        logger.debug("Trying candidate %s for %s", cand, b)
        diff = _double_sin_enclosure(cand, confirm_bits, settings) - target
        if diff.contains_zero() if windowed else diff.magnitude() < bound:
            return RationalAngle.from_fraction(cand)

    logger.debug("No angle with denominator <= %d matches %s", max_q, b)
    return None


# Solving

def _residual(poly: Polynomial, x_enclosure, rhs: ChebEquation, d: int, settings) -> Fraction:
    """
    Certified bound on |poly(x) - rhs| below 10**-d, refining the enclosures as needed.
    :param x_enclosure: callable taking a binary scale and returning an Interval for x.
    """

    bound = Fraction(1, 10 ** d)
    bits = digits_to_bits(d + 10) + horner_guard_bits(poly)

    for _ in range(settings.refine_limit + 1):
        r = eval_interval(poly, x_enclosure(bits)) - rhs.rhs_enclosure(bits, settings)
        if r.magnitude() < bound:
            return r.magnitude()
        bits *= 2

    raise RomanusError(f"Residual of {rhs.rhs_text()} could not be certified below 1e-{d}")


def _solution_for(phi: Fraction, multiplicity: int, eq: ChebEquation, d: int, settings) -> Solution:
    """
    Root x = 2cos(phi*pi), phi in [0, 1], reported through the sine angle 1/2 - phi.
    """

    alpha = HALF - phi
    angle = RationalAngle.from_fraction(alpha)

    radical = None
    if classify(angle) is ConstructibilityClass.SQUARE_ROOTS_ONLY:
        if alpha == 0:
            radical = Literal(0)
        else:
            radical = tower(abs(alpha), Trig.SIN, settings)
            if alpha < 0:
                radical = Negation(radical)

    value = engine_decimal(phi, Trig.COS, d, settings=settings)

    def x_enclosure(bits):
        return cos_sin_pi(phi, bits)[0] * 2

    residual = _residual(eq.polynomial, x_enclosure, eq, d, settings)
    return Solution(angle, radical, value, multiplicity, residual)


def _solve_linear(eq: ChebEquation, d: int, settings) -> SolutionSet:
    angle = None
    exact = eq.exact_rhs()
    if exact is None or abs(exact) <= 2:
        try:
            angle = recognize_angle(eq.rhs, settings=settings)
        except RangeError:
            angle = None

    if isinstance(eq.rhs, PrecisionDecimal):
        radical, value = None, PrecisionDecimal.from_fraction(eq.rhs.to_fraction(), d)
    else:
        radical, value = eq.rhs, evaluate(eq.rhs, d, settings)

    return SolutionSet((Solution(angle, radical, value, 1, Fraction(0)),))


def solve(eq: ChebEquation, d: int = None, settings=None) -> SolutionSet:
    """
    Every root of 2T_n(x/2) = b.
        With b = 2cos(beta*pi) the roots are 2cos(phi_k*pi) for phi_k = (beta + 2k)/n folded
        into [0, 1]; equal phi_k are merged into one root with multiplicity, which happens only
        for |b| = 2.
    :param eq: ChebEquation.
    :param d: guaranteed digits of every root value and residual bound.
    :return: SolutionSet sorted ascending.
    :raises RangeError: when |b| > 2.
    :raises RecognitionError: when b is not 2sin of a recognizable angle.
    """

    settings = settings or load_settings()
    d = d or settings.digits
    _check_digits(d)

    if eq.n == 1:
        return _solve_linear(eq, d, settings)

    alpha_b = recognize_angle(eq.rhs, settings=settings)
    if alpha_b is None:
        raise RecognitionError(f"{eq.rhs_text()} is not 2sin(p*pi/q) with q <= {settings.max_q}")

    beta = _reduce_unit(HALF - alpha_b.ratio)
    logger.debug("Right-hand side is 2sin(%s*pi) = 2cos(%s*pi)", alpha_b, beta)

    phis = Counter(_reduce_unit((beta + 2 * k) / eq.n) for k in range(eq.n))
    solutions = [_solution_for(phi, mult, eq, d, settings)
                 for phi, mult in sorted(phis.items(), reverse=True)]

    return SolutionSet(tuple(solutions))


def solve_numeric(eq: ChebEquation, d: int = None, settings=None) -> SolutionSet:
    """
    Roots of 2T_n(x/2) = b as decimals only, from a certified bracket of beta with b = 2cos(beta*pi).
    :param eq: ChebEquation with |b| < 2.
    :param d: guaranteed digits.
    :return: SolutionSet without angles or radicals.
    :raises RangeError: when |b| >= 2.
    """

    settings = settings or load_settings()
    d = d or settings.digits
    _check_digits(d)

    exact = eq.exact_rhs()
    if exact is not None and abs(exact) >= 2:
        raise RangeError(f"Numeric solving needs |b| < 2, got {exact}")

    n = eq.n
    poly = eq.polynomial
    bits = digits_to_bits(d + 10) + horner_guard_bits(poly) + 2 * n.bit_length()

    for _ in range(settings.refine_limit + 1):
        bv = eq.rhs_enclosure(bits, settings)
        _check_range(bv)
        lo, hi = invert_double_cos(bv, bits)
        try:
            return _numeric_roots(eq, lo, hi, bits, d, settings)
        except UndecidableSign:
            logger.debug("Numeric roots not certified at %d bits, refining", bits)
            bits *= 2

    raise UndecidableSign((), eq.rhs_text())


def _numeric_roots(eq: ChebEquation, lo: Fraction, hi: Fraction, bits: int, d: int, settings):
    n = eq.n
    poly = eq.polynomial
    bound = Fraction(1, 10 ** d)
    mid, half_width = (lo + hi) / 2, (hi - lo) / 2

    roots = []
    for k in range(n):
        phi = _reduce_unit((mid + 2 * k) / n)
        x = cos_sin_pi(phi, bits)[0] * 2
        x = x.widen(8 * half_width / n)

        value = PrecisionDecimal.from_interval(x, d)
        r = eval_interval(poly, x) - eq.rhs_enclosure(x.bits, settings)
        if value is None or r.magnitude() >= bound:
            raise UndecidableSign((), eq.rhs_text())

        roots.append((x.midpoint, Solution(None, None, value, 1, r.magnitude())))

    roots.sort(key=lambda pair: pair[0])
    return SolutionSet(tuple(s for _, s in roots))


def evaluate_at(p: Polynomial, x: RadicalExpr, d: int, settings=None) -> PrecisionDecimal:
    """
    Certified value of p at a radical point.
    """

    settings = settings or load_settings()
    guard = horner_guard_bits(p)

    def enclosure(bits):
        return eval_interval(p, enclose(x, bits + guard, settings))

    return certify(enclosure, d, digits_to_bits(d + 10), settings, label=f"p({render(x)})")


# Audits

def _polygon_phrase(angle: RationalAngle) -> str:
    if angle is not None and angle.p == 1:
        return f"length of one side of a regular polygon with {angle.q} sides"
    return ""


def verify_romanus(example: str, settings=None) -> AuditReport:
    """
    Re-check one of the degree 45 problems.
    :param example: '1', '2', '3' or 'main'.
    :return: AuditReport; status is PASS when the claimed root is the smallest positive root,
        MISMATCH otherwise.
    """

    example = str(example)
    if example not in ROMANUS_PROBLEMS:
        raise ValueError(f"Unknown example {example!r}, expected one of 1, 2, 3, main")

    settings = settings or load_settings()
    if example == '2':
        return _audit_second_example(settings)

    problem = ROMANUS_PROBLEMS[example]
    digits = 30
    eq = ChebEquation(ROMANUS_DEGREE, parse(problem['rhs']))
    smallest = solve(eq, digits, settings).smallest

    if 'claimed' in problem:
        claimed = parse(problem['claimed'])
        found = smallest.radical if smallest.radical is not None else Literal(0)
        agrees = numeric_equal(claimed, found, digits, settings)
        check = AuditCheck('smallest positive root', problem['claimed'], render(found), agrees)
    else:
        claimed = RationalAngle.from_text(problem['claimed_angle'])
        expected = engine_decimal(claimed.ratio, Trig.SIN, digits, settings=settings)
        agrees = smallest.angle == claimed and smallest.value == expected
        check = AuditCheck('smallest positive root', f"2sin({claimed}*pi) = {expected}",
                           f"2sin({smallest.angle}*pi) = {smallest.value}", agrees)

    return AuditReport(example, "PASS" if agrees else "MISMATCH", (check,), smallest,
                       classify(smallest.angle), _polygon_phrase(smallest.angle))


def _audit_second_example(settings) -> AuditReport:
    problem = ROMANUS_PROBLEMS['2']
    digits = 19
    claimed = parse(problem['claimed'])

    lhs = evaluate_at(monic_cheb(ROMANUS_DEGREE), claimed, digits, settings)
    rhs = evaluate(parse(problem['rhs']), digits, settings)
    proposed = evaluate(parse(problem['proposed']), digits, settings)

    corrected = parse(problem['corrected'])
    corrected_angle = recognize_angle(corrected, settings=settings)
    expected_angle = RationalAngle(15, 64)
    angle_ok = corrected_angle == expected_angle and numeric_equal(
        corrected, tower(expected_angle, Trig.SIN, settings), 30, settings)

    smallest = solve(ChebEquation(ROMANUS_DEGREE, corrected), 30, settings).smallest
    root_ok = smallest.angle == RationalAngle(1, 192) and numeric_equal(
        smallest.radical, claimed, 30, settings)

    checks = (
        AuditCheck('claimed root against given b', str(lhs), str(rhs), lhs == rhs),
        AuditCheck('claimed root against proposed b', str(lhs), str(proposed), lhs == proposed),
        AuditCheck('corrected b', render(corrected), f"2sin({corrected_angle}*pi)", angle_ok),
        AuditCheck('root of corrected b', problem['claimed'], f"2sin({smallest.angle}*pi)", root_ok),
    )

    return AuditReport('2', "MISMATCH", checks, smallest, classify(smallest.angle),
                       _polygon_phrase(smallest.angle))


# The new year's gift

GIFT_EQUATIONS = {
    'eq1': "B = 5A - 5A^3 + A^5",
    'eq2': "C = 3B - B^3",
    'eq3': "D = 9B - 30B^3 + 27B^5 - 9B^7 + B^9",
    'eq4': "C^2 + D^2 = 4",
    'eq5': "A = 5E - 5E^3 + E^5",
}


def _gift_solution(alpha: Fraction, d: int, settings) -> Solution:
    angle = RationalAngle.from_fraction(alpha)
    radical = tower(angle, Trig.SIN, settings) or None
    value = engine_decimal(alpha, Trig.SIN, d, settings=settings)
    return Solution(angle, radical, value)


def solve_gift(d: int = 30, settings=None) -> GiftSolution:
    """
    Geometric solution of the gift system with every angle in (0, pi/2).
        sin(theta_3) = sin(3 theta_2), sin(theta_4) = sin(9 theta_2) and theta_3 + theta_4 = pi/2
        give theta_2 = pi/24; then theta_1 = pi/120 and theta_5 = pi/600.
    :param d: guaranteed digits, d >= 18.
    :return: GiftSolution with the residual bound of each equation.
    """

    if d < 18:
        raise ValueError(f"The gift system needs at least 18 digits, got {d}")

    settings = settings or load_settings()

    theta2 = Fraction(1, 24)
    theta3 = 3 * theta2
    theta4 = HALF - theta3
    theta1 = theta2 / 5
    theta5 = theta1 / 5

    A = _gift_solution(theta1, d, settings)
    B = _gift_solution(theta2, d, settings)
    C = _gift_solution(theta3, d, settings)
    D = _gift_solution(theta4, d, settings)
    E = _gift_solution(theta5, d, settings)

    residuals = _gift_residuals((theta1, theta2, theta3, theta4, theta5), d, settings)
    return GiftSolution(A, B, C, D, E, residuals)


def _gift_residuals(thetas, d: int, settings) -> dict:
    v3, v5, v9 = monic_cheb(3), monic_cheb(5), monic_cheb(9)
    bound = Fraction(1, 10 ** d)
    bits = digits_to_bits(d + 10) + horner_guard_bits(v9)

    for _ in range(settings.refine_limit + 1):
        A, B, C, D, E = (cos_sin_pi(t, bits)[1] * 2 for t in thetas)
        residuals = {
            'eq1': eval_interval(v5, A) - B,
            'eq2': C + eval_interval(v3, B),
            'eq3': eval_interval(v9, B) - D,
            'eq4': C.square() + D.square() - 4,
            'eq5': eval_interval(v5, E) - A,
        }
        bounds = {k: r.magnitude() for k, r in residuals.items()}
        if all(b < bound for b in bounds.values()):
            return bounds
        bits *= 2

    raise RomanusError(f"Gift residuals could not be certified below 1e-{d}")
