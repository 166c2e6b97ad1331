"""
The pairing between Betti tables and cohomology tables
Unmodified and (cutoff, tau)-modified sums, and their coefficient tables
on either side as Functional objects
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import IncompatibleShapes, InvalidArgument, WindowTooNarrow
from .exact import primitive_factor, to_fraction
from .pure import pure_values
from .tables import BettiTable, Cell, CohomologyTable, DegreeSequence, Table

logger = logging.getLogger(__name__)

ORIENTATIONS = ('betti', 'cohomology')


@dataclass(frozen=True)
class Functional:
    """Finite coefficient table over Betti or cohomology positions

    Betti side: keys (i, k) for beta[i, k], window = display rows (lo, hi),
    columns = n. Cohomology side: keys (j, d) for h^j(E(d)), window = twist
    bounds (lo, hi), columns = m.
    """
    orientation: str
    coefficients: Dict[Cell, Fraction] = field(default_factory=dict)
    window: Tuple[int, int] = (0, 0)
    columns: int = 0

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise InvalidArgument(f"unknown orientation {self.orientation!r}")
        lo, hi = (int(x) for x in self.window)
        if lo > hi:
            raise InvalidArgument(f"empty window [{lo}, {hi}]")
        object.__setattr__(self, 'window', (lo, hi))
        cleaned = {}
        for (a, b), value in dict(self.coefficients).items():
            value = to_fraction(value)
            if value == 0:
                continue
            a, b = int(a), int(b)
            position = b - a if self.orientation == 'betti' else b
            if not lo <= position <= hi or not 0 <= a <= self.columns:
                raise WindowTooNarrow(f"coefficient at {(a, b)} lies outside the functional's window")
            cleaned[(a, b)] = value
        object.__setattr__(self, 'coefficients', cleaned)

    def value(self, a: int, b: int) -> Fraction:
        return self.coefficients.get((a, b), Fraction(0))

    def cells(self) -> List[Cell]:
        return sorted(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def scaled(self, factor) -> 'Functional':
        factor = to_fraction(factor)
        return Functional(self.orientation,
                          {cell: factor * value for cell, value in self.coefficients.items()},
                          self.window, self.columns)

    def primitive(self) -> 'Functional':
        """Rescale to coprime integers, keeping the sign"""
        return self.scaled(primitive_factor(self.coefficients.values()))

    def evaluate(self, table: Table) -> Fraction:
        """Exact dot product; Betti tables must lie inside the window"""
        if self.orientation == 'betti':
            if not isinstance(table, BettiTable):
                raise IncompatibleShapes("a Betti-side functional evaluates Betti tables")
            lo, hi = self.window
            total = Fraction(0)
            for (i, k), value in table.entries.items():
                if not lo <= k - i <= hi or not 0 <= i <= self.columns:
                    raise WindowTooNarrow(
                        f"entry beta[{i}, {k}] lies outside rows [{lo}, {hi}], columns 0..{self.columns}")
                total += value * self.value(i, k)
            return total
        if not isinstance(table, CohomologyTable):
            raise IncompatibleShapes("a cohomology-side functional evaluates cohomology tables")
        return sum((value * table.value(j, twist) for (j, twist), value in self.coefficients.items()),
                   Fraction(0))


def admitted(i: int, j: int, k: int, cutoff: Optional[int], tau: Optional[int]) -> bool:
    """Whether the term beta[i, k] gamma(j, -k) enters the sum

    Without (cutoff, tau) every j <= i counts. With them, j < tau and
    j <= i - 2 always count, and j = tau counts for i = tau + e (e in 0, 1)
    when k <= cutoff + e.
    """
    if j > i:
        return False
    if tau is None:
        return True
    if j < tau or j <= i - 2:
        return True
    return j == tau and i - tau in (0, 1) and k <= cutoff + (i - tau)


def _check_modifier(cutoff: Optional[int], tau: Optional[int], n: int):
    if (cutoff is None) != (tau is None):
        raise InvalidArgument("cutoff and tau must be given together")
    if tau is not None and not 0 <= tau <= n - 1:
        raise InvalidArgument(f"tau must lie in 0..{n - 1}, got {tau}")


def _pair(b: BettiTable, c: CohomologyTable, cutoff: Optional[int], tau: Optional[int]) -> Fraction:
    total = Fraction(0)
    for (i, k), value in b.entries.items():
        for j in range(min(i, c.m) + 1):
            if admitted(i, j, k, cutoff, tau):
                total += (-1) ** (i - j) * value * c.value(j, -k)
    return total


def pair(b: BettiTable, c: CohomologyTable) -> Fraction:
    """sum over j <= i of (-1)^(i-j) beta[i, k] gamma(j, -k)"""
    return _pair(b, c, None, None)


def pair_modified(b: BettiTable, c: CohomologyTable, cutoff: int, tau: int) -> Fraction:
    _check_modifier(cutoff, tau, b.n)
    return _pair(b, c, cutoff, tau)


def betti_functional(c: CohomologyTable, cutoff: Optional[int] = None, tau: Optional[int] = None,
                     window: Tuple[int, int] = (0, 0), n: Optional[int] = None) -> Functional:
    """Coefficient of every beta[i, i + l] for display rows l in the window

    Args:
        c: complete cohomology table
        cutoff, tau: modifier, both omitted for the unmodified pairing
        window: display rows (lo, hi)
        n: number of Betti columns, m + 1 by default
    """
    n = c.m + 1 if n is None else n
    _check_modifier(cutoff, tau, n)
    lo, hi = window
    coefficients = {}
    for i in range(n + 1):
        for row in range(lo, hi + 1):
            k = i + row
            total = Fraction(0)
            for j in range(min(i, c.m) + 1):
                if admitted(i, j, k, cutoff, tau):
                    total += (-1) ** (i - j) * c.value(j, -k)
            if total:
                coefficients[(i, k)] = total
    return Functional('betti', coefficients, (lo, hi), n)


def cohomology_functional(f: DegreeSequence, cutoff: Optional[int] = None, tau: Optional[int] = None,
                          window: Optional[Tuple[int, int]] = None) -> Functional:
    """Coefficients of gamma(j, -f_i) when pairing the pure table of f

    The coefficient of gamma(j, -f_i) is (-1)^(i-j) beta_i over admitted
    (i, j), on rows 0..n-1.
    """
    if not isinstance(f, DegreeSequence):
        f = DegreeSequence(tuple(f))
    n = f.length
    if n < 1:
        raise InvalidArgument("a cohomology functional needs a degree sequence of length at least 2")
    _check_modifier(cutoff, tau, n)
    m = n - 1
    betti = pure_values(f)
    coefficients: Dict[Cell, Fraction] = {}
    for i, fi in enumerate(f):
        for j in range(min(i, m) + 1):
            if admitted(i, j, fi, cutoff, tau):
                cell = (j, -fi)
                coefficients[cell] = coefficients.get(cell, Fraction(0)) + (-1) ** (i - j) * betti[i]
    if window is None:
        window = (-f[-1], -f[0])
    return Functional('cohomology', coefficients, window, m)
