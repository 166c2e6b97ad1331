"""
Pure Betti tables
Herzog-Kuehl weights, the existence-construction generator count,
moment checks and multiplicity
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List

from .errors import CrossCheckMismatch, InvalidArgument, MomentsNonzero
from .exact import binomial, primitive_factor
from .tables import BettiTable, DegreeSequence

logger = logging.getLogger(__name__)


def pure_ratio_table(d: DegreeSequence) -> List[Fraction]:
    """The weights prod_{j != i} 1/|d_j - d_i| before any normalization"""
    weights = []
    for i, di in enumerate(d):
        denominator = math.prod(abs(dj - di) for j, dj in enumerate(d) if j != i)
        weights.append(Fraction(1, denominator))
    return weights


def hk_pure_table(d: DegreeSequence, n: int) -> BettiTable:
    """Primitive integral pure table with degree sequence d over n variables

    Args:
        d: degree sequence of length c + 1
        n: number of variables, at least c

    Returns:
        BettiTable supported at (i, d_i) with coprime positive integer entries
    """
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(tuple(d))
    if d.length > n:
        raise InvalidArgument(f"degree sequence of length {len(d)} needs n >= {d.length}, got {n}")
    weights = pure_ratio_table(d)
    scale = primitive_factor(weights)
    return BettiTable(n, {(i, di): weights[i] * scale for i, di in enumerate(d)})


def pure_values(d: DegreeSequence) -> List[Fraction]:
    """Column values of the primitive pure table, in column order"""
    weights = pure_ratio_table(d)
    scale = primitive_factor(weights)
    return [w * scale for w in weights]


def construction_generators(d: DegreeSequence) -> int:
    """beta_0 of the pure resolution built by the pushforward construction

    The product prod_{i=1..n} binom(d_i - d_0 - 1, d_i - d_(i-1) - 1) must be a
    positive multiple of the primitive table's beta_0.
    """
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(tuple(d))
    product = 1
    for i in range(1, len(d)):
        product *= binomial(d[i] - d[0] - 1, d[i] - d[i - 1] - 1)
    minimal = pure_values(d)[0]
    ratio = Fraction(product) / minimal
    if product <= 0 or ratio.denominator != 1:
        raise CrossCheckMismatch(
            f"construction gives beta_0 = {product}, not a multiple of the primitive {minimal}")
    logger.debug("construction beta_0 for %s is %s = %s x %s", d.as_list(), product, ratio, minimal)
    return product


def moments(b: BettiTable, count: int) -> List[Fraction]:
    """The moments sum (-1)^i beta[i, j] j^k for k = 0..count-1"""
    sums = [Fraction(0)] * count
    for (i, j), value in b.entries.items():
        signed = (-1) ** i * value
        for k in range(count):
            sums[k] += signed * j ** k
    return sums


def hk_moments_check(b: BettiTable, c: int) -> bool:
    """True iff the first c Herzog-Kuehl moments vanish"""
    return all(moment == 0 for moment in moments(b, c))


def multiplicity(b: BettiTable, c: int) -> Fraction:
    """e = (-1)^c / c! * sum (-1)^i beta[i, j] j^c for a codimension-c consistent table"""
    if not hk_moments_check(b, c):
        raise MomentsNonzero(f"moments below order {c} do not all vanish")
    top = moments(b, c + 1)[c]
    return Fraction((-1) ** c, math.factorial(c)) * top


def pure_summary(d: DegreeSequence, n: int) -> Dict:
    """Everything the pure subcommand reports about one degree sequence"""
    table = hk_pure_table(d, n)
    summary = {
        'degrees': d.as_list(),
        'n': n,
        'values': [table.value(i, di) for i, di in enumerate(d)],
        'weights': pure_ratio_table(d),
        'multiplicity': multiplicity(table, d.length),
    }
    if d.length == n:
        summary['generators'] = construction_generators(d)
    return summary
