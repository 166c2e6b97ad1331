"""
Supernatural cohomology tables, their rank formulas and linear-monad tables
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy
from sympy import Poly, QQ

from .errors import InvalidArgument, RegularityViolation, WindowTooNarrow
from .exact import d as twist, integer_value_gcd, to_fraction, to_sympy, zero_poly
from .tables import CohomologyTable, RootSequence

logger = logging.getLogger(__name__)


def _roots(z) -> RootSequence:
    return z if isinstance(z, RootSequence) else RootSequence(tuple(z))


def default_window(z: RootSequence) -> Tuple[int, int]:
    """Smallest window holding every finite-row entry: [z_m - 1, z_1 + 1]"""
    z = _roots(z)
    return z[-1] - 1, z[0] + 1


def euler_polynomial(z: RootSequence, rank) -> Poly:
    """(rank / m!) prod (d - z_i)"""
    z = _roots(z)
    product = Poly(sympy.prod([twist - root for root in z]), twist, domain=QQ)
    return product.mul_ground(to_sympy(Fraction(to_fraction(rank)) / math.factorial(z.m)))


def supernatural_value(z: RootSequence, rank: Fraction, degree: int) -> Tuple[int, Fraction]:
    """The row holding twist `degree` and its value (zero at a root)"""
    row = sum(1 for root in z if root > degree)
    value = rank / math.factorial(z.m) * math.prod(abs(degree - root) for root in z)
    return row, value


def supernatural_table(z: RootSequence, rank=None, window: Optional[Tuple[int, int]] = None) -> CohomologyTable:
    """Cohomology table of a supernatural bundle with root sequence z

    Args:
        z: strictly decreasing roots z_1 > ... > z_m
        rank: positive rational rank, rank_gcd_bound(z) when omitted
        window: twist window, at least [z_m - 1, z_1 + 1]
    """
    z = _roots(z)
    rank = Fraction(rank_gcd_bound(z)) if rank is None else to_fraction(rank)
    if rank <= 0:
        raise InvalidArgument(f"rank must be positive, got {rank}")
    needed = default_window(z)
    lo, hi = needed if window is None else window
    if lo > needed[0] or hi < needed[1]:
        raise WindowTooNarrow(
            f"window [{lo}, {hi}] does not cover [{needed[0]}, {needed[1]}] for roots {z.as_list()}")
    values = {}
    for degree in range(lo, hi + 1):
        row, value = supernatural_value(z, rank, degree)
        if value:
            values[(row, degree)] = value
    chi = euler_polynomial(z, rank)
    sign = -1 if z.m % 2 else 1
    return CohomologyTable(z.m, (lo, hi), values, chi, chi.mul_ground(sign), complete=True)


def root_content(z: RootSequence) -> int:
    """gcd of the values of prod (t - z_i) over the integers"""
    z = _roots(z)
    return integer_value_gcd(Poly(sympy.prod([twist - root for root in z]), twist, domain=QQ))


def rank_gcd_bound(z: RootSequence) -> int:
    """Smallest rank making the supernatural table integral: m! / root_content(z)"""
    z = _roots(z)
    return math.factorial(z.m) // root_content(z)


def rank_residue_formula(z: RootSequence) -> int:
    """prod over primes p <= m of p^(e_p), e_p the fewest roots in a residue class mod p"""
    z = _roots(z)
    content = 1
    for p in sympy.primerange(2, z.m + 1):
        counts = [0] * p
        for root in z:
            counts[root % p] += 1
        content *= p ** min(counts)
    return content


def consecutive_runs(z: RootSequence) -> List[int]:
    """Lengths of the maximal runs of consecutive integers in z"""
    z = _roots(z)
    runs = [1]
    for previous, current in zip(z, z.entries[1:]):
        if previous - current == 1:
            runs[-1] += 1
        else:
            runs.append(1)
    return runs


def multinomial_rank(z: RootSequence) -> int:
    """m! / (m_1! ... m_k!) over the consecutive runs of z"""
    z = _roots(z)
    rank = math.factorial(z.m)
    for length in consecutive_runs(z):
        rank //= math.factorial(length)
    return rank


def schur_partition(z: RootSequence) -> Tuple[int, ...]:
    """lambda_i = z_1 - z_(m+1-i) - m + i for i = 1..m"""
    z = _roots(z)
    m = z.m
    return tuple(z[0] - z[m - i] - m + i for i in range(1, m + 1))


def schur_rank(z: RootSequence) -> int:
    """Weyl dimension of the Schur functor of schur_partition(z) on a rank-m bundle"""
    partition = schur_partition(z)
    m = len(partition)
    dimension = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            dimension *= Fraction(partition[i] - partition[j] + j - i, j - i)
    return int(dimension)


def rank_summary(z: RootSequence) -> Dict:
    """All rank data for one root sequence"""
    z = _roots(z)
    literal = rank_residue_formula(z)
    return {
        'roots': z.as_list(),
        'rank_gcd_bound': rank_gcd_bound(z),
        'root_content': root_content(z),
        'residue_formula_content': literal,
        'residue_formula_bound': Fraction(math.factorial(z.m), literal),
        'multinomial_rank': multinomial_rank(z),
        'schur_rank': schur_rank(z),
        'schur_partition': list(schur_partition(z)),
    }


def monad_window(z: RootSequence, a: int) -> Tuple[int, int]:
    z = _roots(z)
    return min(z[-1] - 1, -a - z.m), z[0] + 1


def monad_table(z: RootSequence, rank, a: int, window: Optional[Tuple[int, int]] = None) -> CohomologyTable:
    """Cohomology of the linear monad built from a supernatural bundle

    Rows 0..m-1 agree with the supernatural table; row m keeps only twists
    d >= -a - m and has no tail.
    """
    z = _roots(z)
    if a < -z[-1] - z.m:
        raise RegularityViolation(f"a = {a} is below -z_m - m = {-z[-1] - z.m}")
    needed = monad_window(z, a)
    window = needed if window is None else window
    if window[0] > needed[0] or window[1] < needed[1]:
        raise WindowTooNarrow(
            f"window [{window[0]}, {window[1]}] does not cover [{needed[0]}, {needed[1]}] for the monad")
    table = supernatural_table(z, rank, window)
    cutoff = -a - z.m
    values = {(row, degree): value for (row, degree), value in table.values.items()
              if row < z.m or degree >= cutoff}
    logger.debug("monad for %s, a = %s truncates row %s below twist %s", z.as_list(), a, z.m, cutoff)
    return CohomologyTable(z.m, table.window, values, table.tail_high, zero_poly(), True)
