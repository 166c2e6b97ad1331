"""
Greedy decompositions
Betti tables into pure tables and cohomology tables into supernatural tables
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy import Poly

from .errors import (
    BSFanError,
    GapInColumns,
    IncompleteTable,
    InvalidArgument,
    InvalidTable,
    NotInCone,
    NotStrictlyIncreasing,
    WindowTooNarrow,
)
from .exact import eventual_sign, first_negative_beyond, outward, poly_eval, positive_horizon, to_fraction
from .pure import hk_pure_table
from .supernatural import default_window, rank_gcd_bound, supernatural_table
from .tables import (
    BettiTable,
    Cell,
    CohomologyTable,
    DegreeSequence,
    RootSequence,
    Skeleton,
    Table,
    add_scaled,
    cohomology_range,
    column_min_degrees,
    is_chain,
    validate_betti,
    widen,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionPart:
    """One greedy step: coefficient * canonical table of the skeleton"""
    coefficient: Fraction
    skeleton: Skeleton
    table: Table
    zeroed: Tuple[Cell, ...] = ()


@dataclass
class Decomposition:
    kind: str  # 'betti' or 'cohomology'
    parts: List[DecompositionPart] = field(default_factory=list)
    residual: Optional[Table] = None

    def pairs(self) -> List[Tuple[Fraction, Skeleton]]:
        return [(part.coefficient, part.skeleton) for part in self.parts]

    def skeletons(self) -> List[Skeleton]:
        return [part.skeleton for part in self.parts]

    def reconstruct(self) -> Table:
        """residual + sum of coefficient * table"""
        total = self.residual
        for part in self.parts:
            table = part.table
            if isinstance(total, CohomologyTable):
                total, table = _common_window(total, table)
            total = add_scaled(total, part.coefficient, table)
        return total

    def __len__(self) -> int:
        return len(self.parts)


@dataclass
class ConeMembership:
    """Result of is_in_cone: a decomposition certificate or the failing evidence"""
    in_cone: bool
    decomposition: Optional[Decomposition] = None
    evidence: Dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.in_cone


def _common_window(a: CohomologyTable, b: CohomologyTable) -> Tuple[CohomologyTable, CohomologyTable]:
    window = (min(a.lo, b.lo), max(a.hi, b.hi))
    return widen(a, window), widen(b, window)


def decompose_betti(b: BettiTable) -> Decomposition:
    """Peel off the pure table of the minimal degrees until nothing is left

    Raises:
        InvalidTable: negative entries or columns beyond n
        NotInCone: minimal degrees stop being a degree sequence, or the step limit is hit
    """
    if b.is_zero:
        return Decomposition('betti', [], b)
    diagnostics = validate_betti(b)
    if not diagnostics.ok:
        raise InvalidTable("; ".join(diagnostics.issues))

    max_steps = len(b.entries)
    current = b
    parts: List[DecompositionPart] = []
    while not current.is_zero:
        step = len(parts) + 1
        if step > max_steps:
            raise NotInCone(f"no progress after {max_steps} steps",
                            {'step': step, 'reason': 'step limit', 'remainder': current})
        try:
            degrees = column_min_degrees(current)
        except (GapInColumns, NotStrictlyIncreasing) as exc:
            logger.info("betti decomposition stops at step %s: %s", step, exc)
            raise NotInCone(f"step {step}: {exc}",
                            {'step': step, 'reason': type(exc).__name__,
                             'message': str(exc), 'remainder': current}) from exc
        pure = hk_pure_table(degrees, b.n)
        ratio = min(current.value(i, j) / value for (i, j), value in pure.entries.items())
        remainder = add_scaled(current, -ratio, pure)
        zeroed = tuple(cell for cell in sorted(pure.entries) if remainder.value(*cell) == 0)
        logger.debug("step %s: %s x %s, zeroes %s", step, ratio, degrees.as_list(), zeroed)
        parts.append(DecompositionPart(ratio, degrees, pure, zeroed))
        current = remainder
    return Decomposition('betti', parts, current)


def _tail_ratio(tail: Poly, canonical: Poly, edge: int, direction: int) -> Fraction:
    """inf over integers x beyond edge of tail(x) / canonical(x), canonical positive there"""
    top = outward(tail, edge, direction)
    if top.is_zero:
        return Fraction(0)
    bottom = outward(canonical, edge, direction)

    def ratio(u: int) -> Fraction:
        return poly_eval(top, u) / poly_eval(bottom, u)

    numerator = top.diff() * bottom - top * bottom.diff()
    if numerator.is_zero:
        return ratio(1)
    horizon = max(1, positive_horizon(numerator) + 1)
    candidates = [ratio(u) for u in range(1, horizon + 1)]
    if eventual_sign(numerator) < 0:
        # Decreasing past the horizon: the infimum is the limit
        if top.degree() < bottom.degree():
            candidates.append(Fraction(0))
        elif top.degree() == bottom.degree():
            candidates.append(to_fraction(top.LC()) / to_fraction(bottom.LC()))
    return min(candidates)


def _step_limit(c: CohomologyTable) -> int:
    return (c.hi - c.lo + 1) * (c.m + 1) + 2 * (c.m + 1) + 1


def decompose_cohomology(c: CohomologyTable, strict_window: bool = False) -> Decomposition:
    """Peel off supernatural tables with roots z_i = R_i - i

    Args:
        c: complete cohomology table with nonnegative entries
        strict_window: raise WindowTooNarrow instead of widening when a
            candidate needs twists outside the window
    """
    if not c.complete:
        raise IncompleteTable("decomposition needs a complete table")
    if c.is_zero:
        return Decomposition('cohomology', [], c)
    negative = [cell for cell, value in c.values.items() if value < 0]
    if negative:
        raise InvalidTable(f"negative entries at {sorted(negative)}")

    current = c
    parts: List[DecompositionPart] = []
    while not current.is_zero:
        step = len(parts) + 1
        if step > _step_limit(current):
            raise NotInCone(f"no progress after {step - 1} steps",
                            {'step': step, 'reason': 'step limit', 'remainder': current})
        bounds = cohomology_range(current)
        tops = bounds.R[1:]
        if any(math.isinf(value) for value in tops):
            raise NotInCone(f"step {step}: cohomology range {list(tops)} is not finite",
                            {'step': step, 'reason': 'infinite range', 'remainder': current})
        try:
            roots = RootSequence(tuple(int(value) - i for i, value in enumerate(tops, start=1)))
        except InvalidArgument as exc:
            raise NotInCone(f"step {step}: {exc}",
                            {'step': step, 'reason': 'invalid roots', 'remainder': current}) from exc

        needed = default_window(roots)
        if needed[0] < current.lo or needed[1] > current.hi:
            if strict_window:
                raise WindowTooNarrow(
                    f"step {step}: roots {roots.as_list()} need twists [{needed[0]}, {needed[1]}]")
            current = widen(current, (min(needed[0], current.lo), max(needed[1], current.hi)))
            logger.debug("widened window to %s", current.window)

        canonical = supernatural_table(roots, rank_gcd_bound(roots), current.window)
        candidates = [current.value(i, twist) / value for (i, twist), value in canonical.values.items()]
        candidates.append(_tail_ratio(current.tail_high, canonical.tail_high, current.hi, 1))
        candidates.append(_tail_ratio(current.tail_low, canonical.tail_low, current.lo, -1))
        ratio = min(candidates)
        if ratio <= 0:
            logger.info("cohomology decomposition stops at step %s for roots %s", step, roots.as_list())
            raise NotInCone(f"step {step}: no positive multiple of roots {roots.as_list()} fits",
                            {'step': step, 'reason': 'no positive coefficient',
                             'roots': roots.as_list(), 'remainder': current})

        remainder = add_scaled(current, -ratio, canonical)
        for tail, edge, direction in ((remainder.tail_high, remainder.hi, 1),
                                      (remainder.tail_low, remainder.lo, -1)):
            violation = first_negative_beyond(tail, edge, direction)
            if violation is not None:
                raise WindowTooNarrow(f"step {step}: residual tail negative at twist {violation}")
        zeroed = tuple(cell for cell in sorted(canonical.values)
                       if remainder.value(*cell) == 0)
        logger.debug("step %s: %s x %s, zeroes %s", step, ratio, roots.as_list(), zeroed)
        parts.append(DecompositionPart(ratio, roots, canonical, zeroed))
        current = remainder
    return Decomposition('cohomology', parts, current)


def _canonical(skeleton: Skeleton, like: Table, window=None) -> Table:
    if isinstance(skeleton, DegreeSequence):
        return hk_pure_table(skeleton, like.n)
    return supernatural_table(skeleton, rank_gcd_bound(skeleton), window)


def verify_decomposition(table: Table, decomposition: Decomposition) -> bool:
    """Exact reconstruction, positive coefficients and a chain of skeletons"""
    try:
        if any(to_fraction(part.coefficient) <= 0 for part in decomposition.parts):
            return False
        if not is_chain(decomposition.skeletons()):
            return False
        residual = decomposition.residual
        if residual is None or not residual.is_zero:
            return False
        if isinstance(table, BettiTable):
            total = BettiTable.zero(table.n)
            for part in decomposition.parts:
                if not isinstance(part.skeleton, DegreeSequence):
                    return False
                total = add_scaled(total, part.coefficient, _canonical(part.skeleton, table))
            return total == table

        lo, hi = table.window
        for part in decomposition.parts:
            if not isinstance(part.skeleton, RootSequence):
                return False
            needed = default_window(part.skeleton)
            lo, hi = min(lo, needed[0]), max(hi, needed[1])
        total = widen(residual, (min(lo, residual.lo), max(hi, residual.hi)))
        for part in decomposition.parts:
            canonical = widen(_canonical(part.skeleton, table, (lo, hi)), total.window)
            total = add_scaled(total, part.coefficient, canonical)
        return total == widen(table, total.window)
    except BSFanError as exc:
        logger.debug("verification failed: %s", exc)
        return False


def decompose(table: Table, strict_window: bool = False) -> Decomposition:
    if isinstance(table, BettiTable):
        return decompose_betti(table)
    return decompose_cohomology(table, strict_window=strict_window)


def is_in_cone(table: Table, strict_window: bool = False) -> ConeMembership:
    """Membership with a certificate: the decomposition, or the failing step"""
    try:
        return ConeMembership(True, decompose(table, strict_window))
    except NotInCone as exc:
        evidence = dict(exc.evidence)
        evidence.setdefault('message', str(exc))
        return ConeMembership(False, None, evidence)
