"""
Facet equations of the cone of Betti tables
Upper and lower equations solved along a maximal chain, the construction
from a supernatural monad, and facets on the cohomology side
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .errors import CrossCheckMismatch, GapNotTwo, InvalidArgument, NotAFacet, WindowTooNarrow
from .pairing import Functional, betti_functional, cohomology_functional
from .pure import pure_values
from .supernatural import monad_table, rank_gcd_bound, supernatural_table
from .tables import Cell, DegreeSequence, RootSequence

logger = logging.getLogger(__name__)

DESCENTS = ('canonical', 'random')


def _degrees(f) -> DegreeSequence:
    return f if isinstance(f, DegreeSequence) else DegreeSequence(tuple(f))


def facet_neighbors(f: DegreeSequence, tau: int) -> Tuple[DegreeSequence, DegreeSequence]:
    """(f-, f+): f with f_(tau+1) lowered by one, and f with f_tau raised by one"""
    f = _degrees(f)
    if not 0 <= tau < f.length:
        raise InvalidArgument(f"tau must lie in 0..{f.length - 1}, got {tau}")
    if f[tau + 1] != f[tau] + 2:
        raise GapNotTwo(f"f_{tau + 1} - f_{tau} = {f[tau + 1] - f[tau]}, expected 2")
    lower = list(f)
    lower[tau + 1] -= 1
    upper = list(f)
    upper[tau] += 1
    return DegreeSequence(tuple(lower)), DegreeSequence(tuple(upper))


def _in_window(cell: Cell, window: Tuple[int, int], n: int) -> bool:
    i, k = cell
    return 0 <= i <= n and window[0] <= k - i <= window[1]


def _step_order(descent: str, seed: Optional[int]) -> Callable[[List[int]], int]:
    if descent not in DESCENTS:
        raise InvalidArgument(f"unknown descent {descent!r}, expected one of {DESCENTS}")
    if descent == 'canonical':
        return max
    rng = random.Random(seed)
    return rng.choice


def _solve_chain(start: DegreeSequence, known: Dict[Cell, Fraction], movable: Callable[[List[int]], List[int]],
                 direction: int, pick: Callable[[List[int]], int]) -> Dict[Cell, Fraction]:
    """Walk a maximal chain from `start`, solving the one new cell of each pure table

    Every pure table on the chain must pair to zero with the functional, and
    each step introduces exactly one unknown coefficient.
    """
    coefficients = dict(known)
    g = list(start)
    steps = 0
    while True:
        candidates = movable(g)
        if not candidates:
            break
        index = pick(candidates)
        g[index] += direction
        beta = pure_values(DegreeSequence(tuple(g)))
        rest = sum((coefficients.get((i, gi), Fraction(0)) * beta[i]
                    for i, gi in enumerate(g) if i != index), Fraction(0))
        coefficients[(index, g[index])] = -rest / beta[index]
        steps += 1
    logger.debug("chain from %s solved %s cells", list(start), steps)
    return coefficients


def _finish(coefficients: Dict[Cell, Fraction], window: Tuple[int, int], n: int,
            sign_cell: Cell) -> Functional:
    restricted = {cell: value for cell, value in coefficients.items() if _in_window(cell, window, n)}
    functional = Functional('betti', restricted, window, n).primitive()
    if functional.value(*sign_cell) < 0:
        functional = functional.scaled(-1)
    return functional


def upper_facet_equation(f: DegreeSequence, tau: int, window: Tuple[int, int],
                         descent: str = 'canonical', seed: Optional[int] = None) -> Functional:
    """The facet equation vanishing on every pure table <= f- or >= f+

    Args:
        f: full-length degree sequence with f_(tau+1) = f_tau + 2
        tau: facet position
        window: display rows (lo, hi)
        descent: 'canonical' lowers the largest useful coordinate first,
            'random' picks one with a seeded generator

    Returns:
        Primitive integral Functional, positive on the pure table of f
    """
    f = _degrees(f)
    minus, plus = facet_neighbors(f, tau)
    n = f.length
    lo, hi = window
    beta = pure_values(minus)
    seeds = {(tau, minus[tau]): beta[tau + 1], (tau + 1, minus[tau + 1]): -beta[tau]}
    for cell in seeds:
        if not _in_window(cell, window, n):
            raise WindowTooNarrow(f"seed cell {cell} lies outside display rows [{lo}, {hi}]")
    # Cells with k >= f+_i are zero and never stored

    def movable(g: List[int]) -> List[int]:
        return [i for i in range(n + 1)
                if g[i] > i + lo and (i == 0 or g[i] - 1 > g[i - 1])]

    coefficients = _solve_chain(minus, seeds, movable, -1, _step_order(descent, seed))
    return _finish(coefficients, (lo, hi), n, (tau, f[tau]))


def lower_facet_equation(f: DegreeSequence, tau: int, window: Tuple[int, int],
                         descent: str = 'canonical', seed: Optional[int] = None) -> Functional:
    """Mirror of upper_facet_equation: zero on and below f-, solved upward from f+"""
    f = _degrees(f)
    minus, plus = facet_neighbors(f, tau)
    n = f.length
    lo, hi = window
    beta = pure_values(plus)
    seeds = {(tau, plus[tau]): -beta[tau + 1], (tau + 1, plus[tau + 1]): beta[tau]}
    for cell in seeds:
        if not _in_window(cell, window, n):
            raise WindowTooNarrow(f"seed cell {cell} lies outside display rows [{lo}, {hi}]")

    def movable(g: List[int]) -> List[int]:
        return [i for i in range(n + 1)
                if g[i] < i + hi and (i == n or g[i] + 1 < g[i + 1])]

    order = _step_order(descent, seed)
    pick = min if order is max else order
    coefficients = _solve_chain(plus, seeds, movable, 1, pick)
    return _finish(coefficients, (lo, hi), n, (tau + 1, f[tau + 1]))


@dataclass(frozen=True)
class FacetData:
    """Monad recipe for a facet: roots, rank, regularity shift a and cutoff"""
    roots: RootSequence
    rank: int
    a: int
    cutoff: int
    tau: int
    n: int


def facet_data(f: DegreeSequence, tau: int) -> FacetData:
    f = _degrees(f)
    facet_neighbors(f, tau)
    n = f.length
    if n < 2:
        raise InvalidArgument("the monad construction needs a degree sequence of length at least 3")
    roots = RootSequence(tuple(-x for i, x in enumerate(f) if i not in (tau, tau + 1)))
    return FacetData(roots, rank_gcd_bound(roots), f[n] - n + 1, f[tau], tau, n)


def facet_from_supernatural(f: DegreeSequence, tau: int, window: Tuple[int, int],
                            check: bool = True) -> Functional:
    """The upper facet equation read off the modified pairing with a supernatural monad

    With check set, the result must equal upper_facet_equation or CrossCheckMismatch is raised.
    """
    f = _degrees(f)
    data = facet_data(f, tau)
    monad = monad_table(data.roots, data.rank, data.a)
    sign_cell = (tau, f[tau])
    if not _in_window(sign_cell, window, data.n):
        raise WindowTooNarrow(f"cell {sign_cell} lies outside display rows {list(window)}")
    functional = betti_functional(monad, data.cutoff, tau, window, n=data.n).primitive()
    if functional.value(*sign_cell) < 0:
        functional = functional.scaled(-1)
    if check:
        expected = upper_facet_equation(f, tau, window)
        if functional != expected:
            differing = sorted(set(functional.cells()) ^ set(expected.cells()) | {
                cell for cell in functional.cells() if functional.value(*cell) != expected.value(*cell)})
            raise CrossCheckMismatch(
                f"monad and chain constructions differ at {differing[:5]} for f = {f.as_list()}, tau = {tau}")
    return functional


def cohomology_facet(z: RootSequence, i: int, window: Optional[Tuple[int, int]] = None) -> Functional:
    """Facet of the cohomology cone between z- and z+ (z_i lowered or raised by one)"""
    z = z if isinstance(z, RootSequence) else RootSequence(tuple(z))
    if not 1 <= i <= z.m:
        raise InvalidArgument(f"root index must lie in 1..{z.m}, got {i}")
    root = z[i - 1]
    if i > 1 and z[i - 2] <= root + 1:
        raise NotAFacet(f"raising z_{i} = {root} collides with z_{i - 1} = {z[i - 2]}")
    if i < z.m and z[i] >= root - 1:
        raise NotAFacet(f"lowering z_{i} = {root} collides with z_{i + 1} = {z[i]}")
    f = DegreeSequence(tuple(sorted({-x for x in z} | {-root - 1, -root + 1})))
    tau = f.entries.index(-root)
    functional = cohomology_functional(f, f[tau] - 1, tau, window).primitive()
    if functional.evaluate(supernatural_table(z)) < 0:
        functional = functional.scaled(-1)
    return functional


def diagonal_check(functional: Functional, f: DegreeSequence) -> bool:
    """b[i+1, j] = -b[i, j] whenever j < f_i and both cells lie in the window"""
    f = _degrees(f)
    if functional.orientation != 'betti':
        raise InvalidArgument("diagonal_check applies to Betti-side functionals")
    for i in range(min(f.length, functional.columns)):
        lo = functional.window[0] + i + 1
        for j in range(lo, f[i]):
            if not _in_window((i, j), functional.window, functional.columns):
                continue
            if functional.value(i + 1, j) != -functional.value(i, j):
                return False
    return True
