"""
Numeric corollaries of the decomposition theorems
Multiplicity bounds, the linear-strand ratio, the Euler characteristic
polynomial and slope bounds
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from sympy import Poly

from .errors import (
    EmptyColumn,
    HypothesisViolated,
    IncompleteTable,
    InconsistentTable,
    InvalidArgument,
    WindowTooNarrow,
)
from .exact import binomial_poly, interpolate, poly_eval, to_fraction
from .tables import BettiTable, CohomologyTable, cohomology_range

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplicityBounds:
    lower: Fraction
    upper: Fraction
    normalized: bool
    cyclic: bool  # beta[0, 0] == 1 and column 0 has no other entry

    def brackets(self, value) -> bool:
        return self.lower <= to_fraction(value) <= self.upper

    def as_dict(self) -> Dict:
        return {'lower': self.lower, 'upper': self.upper,
                'normalized': self.normalized, 'cyclic': self.cyclic}


@dataclass(frozen=True)
class SlopeBounds:
    lower: Fraction
    mu: Fraction
    upper: Fraction
    rank: Fraction
    degree: Fraction

    def as_dict(self) -> Dict:
        return {'lower': self.lower, 'mu': self.mu, 'upper': self.upper,
                'rank': self.rank, 'degree': self.degree}


def multiplicity_bounds(b: BettiTable, c: int, normalized: bool = False) -> MultiplicityBounds:
    """prod_{i=1..c} min degree / c! and prod max degree / c!, times beta_0 unless normalized

    Args:
        b: Betti table with columns 0..c nonempty
        c: codimension
        normalized: bound e / beta_0 instead of e
    """
    if c < 1:
        raise InvalidArgument(f"codimension must be positive, got {c}")
    for i in range(c + 1):
        if not b.degrees(i):
            raise EmptyColumn(f"column {i} is empty")
    low = math.prod(b.degrees(i)[0] for i in range(1, c + 1))
    high = math.prod(b.degrees(i)[-1] for i in range(1, c + 1))
    scale = Fraction(1, math.factorial(c))
    generators = sum((b.value(0, j) for j in b.degrees(0)), Fraction(0))
    if not normalized:
        scale *= generators
    cyclic = b.degrees(0) == [0] and b.value(0, 0) == 1
    if not cyclic and not normalized:
        logger.warning("table has %s generators; the normalized bounds apply", generators)
    return MultiplicityBounds(low * scale, high * scale, normalized, cyclic)


def strand_bound(p: int, c: int) -> Fraction:
    """(c + 2 - p) / (2p)"""
    if not 1 <= p <= c:
        raise InvalidArgument(f"need 1 <= p <= c, got p = {p}, c = {c}")
    return Fraction(c + 2 - p, 2 * p)


def strand_check(b: BettiTable, p: int, c: int) -> bool:
    """beta[p, p] <= strand_bound(p, c) * beta[p-1, p-1] when beta[p+1, p+1] = 0"""
    bound = strand_bound(p, c)
    if b.value(p + 1, p + 1) != 0:
        raise HypothesisViolated(f"beta[{p + 1}, {p + 1}] = {b.value(p + 1, p + 1)} is nonzero")
    return b.value(p, p) <= bound * b.value(p - 1, p - 1)


def euler_characteristic(c: CohomologyTable, twist: int) -> Fraction:
    return sum(((-1) ** i * c.value(i, twist) for i in range(c.m + 1)), Fraction(0))


def chi_polynomial(c: CohomologyTable) -> Poly:
    """Interpolate sum (-1)^i h^i(E(d)) on the window and check it against the rest"""
    if not c.complete:
        raise IncompleteTable("the Euler characteristic needs a complete table")
    if c.hi - c.lo + 1 < c.m + 2:
        raise WindowTooNarrow(f"window of width {c.hi - c.lo + 1} needs at least {c.m + 2} twists")
    points = [(x, euler_characteristic(c, x)) for x in range(c.lo, c.hi + 1)]
    chi = interpolate(points[:c.m + 1])
    for x, value in points[c.m + 1:]:
        if poly_eval(chi, x) != value:
            raise InconsistentTable(f"alternating sum at twist {x} is {value}, "
                                    f"interpolation predicts {poly_eval(chi, x)}")
    sign = -1 if c.m % 2 else 1
    if not c.tail_high.is_zero and chi != c.tail_high:
        raise InconsistentTable("row 0 tail disagrees with the alternating sums")
    if not c.tail_low.is_zero and chi.mul_ground(sign) != c.tail_low:
        raise InconsistentTable("row m tail disagrees with the alternating sums")
    return chi


def _coefficient(p: Poly, power: int) -> Fraction:
    if p.is_zero or power > p.degree():
        return Fraction(0)
    return to_fraction(p.coeff_monomial(p.gen ** power))


def slope_bounds(c: CohomologyTable) -> SlopeBounds:
    """Bracket mu = deg / rank between -(1/m) sum R_i and -(1/m) sum r_i

    rank and degree come from writing chi as
    rank * binom(d + m, m) + degree * binom(d + m - 1, m - 1) + lower terms.
    """
    chi = chi_polynomial(c)
    m = c.m
    rank = _coefficient(chi, m) * math.factorial(m)
    if rank <= 0:
        raise InvalidArgument(f"slope needs positive rank, got {rank}")
    remainder = _coefficient(chi, m - 1) - rank * _coefficient(binomial_poly(m, m), m - 1)
    degree = remainder / _coefficient(binomial_poly(m - 1, m - 1), m - 1)
    mu = degree / rank
    bounds = cohomology_range(c)
    tops = bounds.R[1:]
    bottoms = bounds.r[:m]
    if any(math.isinf(x) for x in tops + bottoms):
        raise InvalidArgument("slope bounds need a finite cohomology range")
    lower = -Fraction(sum(int(x) for x in tops), m)
    upper = -Fraction(sum(int(x) for x in bottoms), m)
    logger.debug("slope %s within [%s, %s]", mu, lower, upper)
    return SlopeBounds(lower, mu, upper, rank, degree)
