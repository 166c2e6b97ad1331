"""
Exact arithmetic helpers shared by every other module
Rationals are fractions.Fraction; polynomials are sympy Polys over QQ in the twist variable d
"""

import logging
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy import Poly, QQ

from .errors import NotIntegerValued, ZeroPolynomial

logger = logging.getLogger(__name__)

# Twist / degree indeterminate used by every polynomial in the package
d = sympy.Symbol('d')

# Above this many integers we isolate real roots instead of scanning up to the Cauchy bound
SCAN_LIMIT = 64


def to_fraction(value) -> Fraction:
    """Coerce ints, strings, Fractions and sympy rationals to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (float, sympy.Float)):
        raise TypeError(f"floats are not exact rationals: {value!r}; use an int or a \"p/q\" string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def to_sympy(value) -> sympy.Rational:
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def format_rational(value) -> str:
    """Canonical text form: "p/q", or "p" when q = 1"""
    return str(to_fraction(value))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def binomial(a: int, k: int) -> int:
    """Generalized binomial a(a-1)...(a-k+1)/k! for any integer a"""
    if k < 0:
        raise ValueError(f"binomial lower index must be nonnegative, got {k}")
    return int(sympy.ff(a, k) / sympy.factorial(k))


def zero_poly() -> Poly:
    return Poly(0, d, domain=QQ)


def poly_from_coeffs(coeffs: Sequence) -> Poly:
    """Build a Poly from coefficients listed lowest degree first"""
    if not coeffs:
        return zero_poly()
    return Poly.from_list([to_sympy(c) for c in reversed(list(coeffs))], d, domain=QQ)


def poly_coeffs(p: Poly) -> List[Fraction]:
    """Coefficients lowest degree first, trailing coefficient nonzero (empty for the zero polynomial)"""
    if p.is_zero:
        return []
    return [to_fraction(c) for c in reversed(p.all_coeffs())]


def poly_eval(p: Poly, x) -> Fraction:
    return to_fraction(p.eval(to_sympy(x)))


def binomial_poly(shift: int, k: int) -> Poly:
    """The degree-k polynomial binom(d + shift, k) in d"""
    if k < 0:
        raise ValueError(f"binomial lower index must be nonnegative, got {k}")
    numerator = sympy.prod([d + shift - i for i in range(k)])
    return Poly(numerator / sympy.factorial(k), d, domain=QQ)


def interpolate(points: Sequence[Tuple[int, Fraction]]) -> Poly:
    """The unique polynomial of degree < len(points) through the given points"""
    if all(to_fraction(y) == 0 for _, y in points):
        return zero_poly()
    data = [(sympy.Integer(x), to_sympy(y)) for x, y in points]
    return Poly(sympy.interpolate(data, d), d, domain=QQ)


def integer_value_gcd(p: Poly) -> int:
    """gcd of p(x) over all integers x

    Computed from the Newton forward differences at 0, which are the
    coefficients of p in the binomial basis binom(x, k).

    Raises:
        ZeroPolynomial: p is identically zero
        NotIntegerValued: some binomial-basis coefficient is not an integer
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no value gcd")
    row = [poly_eval(p, x) for x in range(p.degree() + 1)]
    differences = []
    while row:
        differences.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    if any(c.denominator != 1 for c in differences):
        raise NotIntegerValued(f"{p.as_expr()} does not take integer values on the integers")
    return reduce(math.gcd, (abs(c.numerator) for c in differences), 0)


def sign_stable_bound(p: Poly) -> int:
    """Cauchy bound: for |x| > B the sign of p(x) is the sign of its leading term"""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no sign")
    coeffs = poly_coeffs(p)
    lead = coeffs[-1]
    ratio = max((abs(c / lead) for c in coeffs[:-1]), default=Fraction(0))
    return math.ceil(1 + ratio)


def positive_horizon(p: Poly) -> int:
    """An integer H >= 0 such that p has no real root greater than H"""
    bound = sign_stable_bound(p)
    if bound <= SCAN_LIMIT:
        return bound
    roots = p.intervals()
    if not roots:
        return 0
    top = max(to_fraction(interval[1]) for interval, _ in roots)
    return max(0, math.ceil(top))


def eventual_sign(p: Poly, direction: int = 1) -> int:
    """Sign of p(x) as x goes to infinity in the given direction (+1 or -1)"""
    if p.is_zero:
        return 0
    lead = to_fraction(p.LC())
    sign = 1 if lead > 0 else -1
    if direction < 0 and p.degree() % 2 == 1:
        sign = -sign
    return sign


def outward(p: Poly, edge: int, direction: int) -> Poly:
    """p re-expressed in the distance u = direction * (x - edge) from a window edge"""
    return p.compose(Poly(edge + direction * d, d, domain=QQ))


def first_negative_beyond(p: Poly, edge: int, direction: int) -> Optional[int]:
    """First integer x beyond edge (strictly, walking in direction) with p(x) < 0, or None

    Certification is exact: every integer up to the root horizon of the
    re-centred polynomial is evaluated, and past it the leading sign decides.
    """
    if p.is_zero:
        return None
    shifted = outward(p, edge, direction)
    horizon = positive_horizon(shifted)
    logger.debug("certifying %s beyond %s (direction %s) up to distance %s",
                 p.as_expr(), edge, direction, horizon + 1)
    for u in range(1, horizon + 2):
        if poly_eval(shifted, u) < 0:
            return edge + direction * u
    if eventual_sign(shifted) < 0:
        # Negative for every u past the horizon
        return edge + direction * (horizon + 2)
    return None


def primitive_factor(values: Iterable[Fraction]) -> Fraction:
    """Positive rational s such that s*v are coprime integers for the nonzero values v"""
    nonzero = [to_fraction(v) for v in values if v != 0]
    if not nonzero:
        return Fraction(1)
    denominator = reduce(math.lcm, (v.denominator for v in nonzero), 1)
    content = reduce(math.gcd, (abs(v.numerator) * (denominator // v.denominator) for v in nonzero), 0)
    return Fraction(denominator, content)
