"""
Core table types and the operations every algorithm builds on
Degree and root sequences, chains, Betti tables, cohomology tables,
validation, cohomology ranges and Hilbert polynomials
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from sympy import Poly

from .errors import (
    GapInColumns,
    IncompatibleShapes,
    IncompleteTable,
    InvalidArgument,
    InvalidTable,
    NotStrictlyIncreasing,
    WindowTooNarrow,
)
from .exact import (
    binomial,
    binomial_poly,
    first_negative_beyond,
    poly_eval,
    poly_from_coeffs,
    to_fraction,
    to_sympy,
    zero_poly,
)

logger = logging.getLogger(__name__)

INFINITY = math.inf

Cell = Tuple[int, int]
Bound = Union[int, float]  # finite ints, or +/- INFINITY


def _parse_int_list(text: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in text.split(',') if part.strip())


@dataclass(frozen=True)
class DegreeSequence:
    """Strictly increasing integers d_0 < d_1 < ... < d_c"""
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, 'entries', entries)
        if not entries:
            raise NotStrictlyIncreasing("a degree sequence needs at least one entry", entries)
        for a, b in zip(entries, entries[1:]):
            if a >= b:
                raise NotStrictlyIncreasing(
                    f"degree sequence {list(entries)} is not strictly increasing", entries)

    @classmethod
    def parse(cls, text: str) -> 'DegreeSequence':
        return cls(_parse_int_list(text))

    @property
    def length(self) -> int:
        """The homological length c"""
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __le__(self, other: 'DegreeSequence') -> bool:
        # A longer sequence sits below a shorter one it dominates termwise
        if len(self) < len(other):
            return False
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: 'DegreeSequence') -> bool:
        return other.__le__(self)

    def __lt__(self, other: 'DegreeSequence') -> bool:
        return self <= other and self != other

    def __gt__(self, other: 'DegreeSequence') -> bool:
        return other < self

    def shifted(self, t: int) -> 'DegreeSequence':
        return DegreeSequence(tuple(x + t for x in self.entries))

    def dual(self) -> 'DegreeSequence':
        """Reverse and negate"""
        return DegreeSequence(tuple(-x for x in reversed(self.entries)))

    def as_list(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class RootSequence:
    """Strictly decreasing integers z_1 > z_2 > ... > z_m"""
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, 'entries', entries)
        if not entries:
            raise InvalidArgument("a root sequence needs at least one root")
        for a, b in zip(entries, entries[1:]):
            if a <= b:
                raise InvalidArgument(f"root sequence {list(entries)} is not strictly decreasing")

    @classmethod
    def parse(cls, text: str) -> 'RootSequence':
        return cls(_parse_int_list(text))

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __le__(self, other: 'RootSequence') -> bool:
        if len(self) != len(other):
            return False
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: 'RootSequence') -> bool:
        return other.__le__(self)

    def __lt__(self, other: 'RootSequence') -> bool:
        return self <= other and self != other

    def __gt__(self, other: 'RootSequence') -> bool:
        return other < self

    def as_list(self) -> List[int]:
        return list(self.entries)


Skeleton = Union[DegreeSequence, RootSequence]


def is_chain(items: Sequence[Skeleton]) -> bool:
    """Degree sequences must strictly increase, root sequences strictly decrease"""
    for previous, current in zip(items, items[1:]):
        if type(previous) is not type(current):
            return False
        if isinstance(current, DegreeSequence) and not previous < current:
            return False
        if isinstance(current, RootSequence) and not current < previous:
            return False
    return True


@dataclass(frozen=True)
class Chain:
    """A totally ordered run of skeletons in emission order"""
    items: Tuple[Skeleton, ...]

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(self.items))
        if not is_chain(self.items):
            raise InvalidArgument("sequences do not form a chain in the termwise order")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@dataclass(frozen=True)
class BettiTable:
    """Finitely supported table beta[i, j]; column i is homological, j the internal degree

    Display row l of column i holds beta[i, i + l].
    """
    n: int
    entries: Dict[Cell, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidTable(f"number of variables must be nonnegative, got {self.n}")
        cleaned = {}
        for (i, j), value in dict(self.entries).items():
            value = to_fraction(value)
            if value != 0:
                cleaned[(int(i), int(j))] = value
        object.__setattr__(self, 'entries', cleaned)

    @classmethod
    def zero(cls, n: int) -> 'BettiTable':
        return cls(n, {})

    @classmethod
    def from_display(cls, n: int, rows: Dict[int, Sequence]) -> 'BettiTable':
        """Build from display rows: rows[l][i] is beta[i, i + l]; None or 0 marks an empty cell"""
        entries = {}
        for row, values in rows.items():
            for i, value in enumerate(values):
                if value is None:
                    continue
                value = to_fraction(value)
                if value != 0:
                    entries[(i, i + row)] = value
        return cls(n, entries)

    def value(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def columns(self) -> List[int]:
        return sorted({i for i, _ in self.entries})

    def degrees(self, i: int) -> List[int]:
        return sorted(j for col, j in self.entries if col == i)

    def display_rows(self) -> Optional[Tuple[int, int]]:
        if not self.entries:
            return None
        rows = [j - i for i, j in self.entries]
        return min(rows), max(rows)

    def cells(self) -> List[Cell]:
        return sorted(self.entries)


@dataclass(frozen=True)
class CohomologyTable:
    """Values h^i(E(d)) over a twist window plus polynomial tails for rows 0 and m

    tail_high gives row 0 for every twist above the window and tail_low gives
    row m below it. `complete` certifies that everything else outside the
    window vanishes.
    """
    m: int
    window: Tuple[int, int]
    values: Dict[Cell, Fraction] = field(default_factory=dict)
    tail_high: Poly = field(default_factory=zero_poly)
    tail_low: Poly = field(default_factory=zero_poly)
    complete: bool = True

    def __post_init__(self):
        if self.m < 1:
            raise InvalidTable(f"projective dimension must be at least 1, got {self.m}")
        lo, hi = (int(x) for x in self.window)
        if lo > hi:
            raise InvalidTable(f"empty window [{lo}, {hi}]")
        object.__setattr__(self, 'window', (lo, hi))
        cleaned = {}
        for (i, twist), value in dict(self.values).items():
            i, twist = int(i), int(twist)
            if not 0 <= i <= self.m:
                raise InvalidTable(f"row {i} outside 0..{self.m}")
            if not lo <= twist <= hi:
                raise InvalidTable(f"twist {twist} outside window [{lo}, {hi}]")
            value = to_fraction(value)
            if value != 0:
                cleaned[(i, twist)] = value
        object.__setattr__(self, 'values', cleaned)
        for name in ('tail_high', 'tail_low'):
            tail = getattr(self, name)
            if not isinstance(tail, Poly):
                tail = poly_from_coeffs(tail)
                object.__setattr__(self, name, tail)
            if not tail.is_zero and tail.degree() > self.m:
                raise InvalidTable(f"{name} has degree {tail.degree()} > m = {self.m}")

    @property
    def lo(self) -> int:
        return self.window[0]

    @property
    def hi(self) -> int:
        return self.window[1]

    def value(self, i: int, twist: int) -> Fraction:
        """h^i(E(twist)), reading tails and the completeness flag outside the window"""
        if not 0 <= i <= self.m:
            return Fraction(0)
        if self.lo <= twist <= self.hi:
            return self.values.get((i, twist), Fraction(0))
        if i == 0 and twist > self.hi:
            return poly_eval(self.tail_high, twist)
        if i == self.m and twist < self.lo:
            return poly_eval(self.tail_low, twist)
        if self.complete:
            return Fraction(0)
        raise IncompleteTable(f"h^{i}(E({twist})) lies outside the window of an incomplete table")

    def display_value(self, row: int, column: int) -> Fraction:
        """The displayed entry gamma[row, column - row]"""
        return self.value(row, column - row)

    @property
    def is_zero(self) -> bool:
        return not self.values and self.tail_high.is_zero and self.tail_low.is_zero

    def cells(self) -> List[Cell]:
        return sorted(self.values)


Table = Union[BettiTable, CohomologyTable]


@dataclass
class Diagnostics:
    """Outcome of a validation pass"""
    subject: str
    issues: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, issue: str):
        logger.debug("%s: %s", self.subject, issue)
        self.issues.append(issue)

    def as_dict(self) -> Dict:
        return {'subject': self.subject, 'valid': self.ok, 'issues': list(self.issues)}


class CohomologyRange(NamedTuple):
    """r holds r_1..r_(m+1), R holds R_0..R_m"""
    r: Tuple[Bound, ...]
    R: Tuple[Bound, ...]

    def r_at(self, i: int) -> Bound:
        return self.r[i - 1]

    def R_at(self, i: int) -> Bound:
        return self.R[i]


def validate_betti(b: BettiTable) -> Diagnostics:
    diagnostics = Diagnostics('betti table')
    if b.is_zero:
        diagnostics.add("empty table: no generator column")
        return diagnostics
    for (i, j), value in sorted(b.entries.items()):
        if not 0 <= i <= b.n:
            diagnostics.add(f"entry at column {i} (degree {j}) outside columns 0..{b.n}")
        if value < 0:
            diagnostics.add(f"negative entry {value} at column {i}, degree {j}")
    return diagnostics


def column_min_degrees(b: BettiTable) -> DegreeSequence:
    """Minimal degree in each column 0..c, c the last nonempty column

    Raises:
        GapInColumns: an empty column precedes a nonempty one (or the table is empty)
        NotStrictlyIncreasing: the minimal degrees do not strictly increase
    """
    columns = b.columns()
    if not columns:
        raise GapInColumns("empty table has no minimal degrees")
    last = columns[-1]
    missing = sorted(set(range(last + 1)) - set(columns))
    if missing:
        raise GapInColumns(f"column {missing[0]} is empty but column {last} is not")
    minima = tuple(b.degrees(i)[0] for i in range(last + 1))
    for i, (a, c) in enumerate(zip(minima, minima[1:])):
        if a >= c:
            raise NotStrictlyIncreasing(
                f"minimal degrees {list(minima)} fail d_{i} < d_{i + 1}", minima)
    return DegreeSequence(minima)


def hilbert_polynomial(b: BettiTable) -> Poly:
    """p_M(d) = sum_j p_S(d - j) sum_i (-1)^i beta[i, j] with p_S(t) = binom(t + n - 1, n - 1)"""
    if b.n < 1:
        raise InvalidArgument("the Hilbert polynomial needs at least one variable")
    alternating: Dict[int, Fraction] = {}
    for (i, j), value in b.entries.items():
        alternating[j] = alternating.get(j, Fraction(0)) + (-1) ** i * value
    total = zero_poly()
    for j, weight in sorted(alternating.items()):
        if weight != 0:
            total = total + binomial_poly(b.n - 1 - j, b.n - 1).mul_ground(to_sympy(weight))
    return total


def hilbert_function(b: BettiTable, degree: int) -> Fraction:
    """Alternating sum of dim S(-j)_degree, zero in negative degrees"""
    total = Fraction(0)
    for (i, j), value in b.entries.items():
        if degree - j >= 0:
            total += (-1) ** i * value * binomial(degree - j + b.n - 1, b.n - 1)
    return total


def regularity(b: BettiTable) -> Optional[int]:
    """max{j - i | beta[i, j] != 0}, None for the zero table"""
    rows = b.display_rows()
    return None if rows is None else rows[1]


def _first_nonzero(tail: Poly, edge: int, direction: int) -> int:
    x = edge + direction
    while poly_eval(tail, x) == 0:
        x += direction
    return x


def _row_extent(c: CohomologyTable, i: int) -> Optional[Tuple[Bound, Bound]]:
    """First and last display column where row i is nonzero"""
    columns = [twist + i for row, twist in c.values if row == i]
    first: Optional[Bound] = min(columns) if columns else None
    last: Optional[Bound] = max(columns) if columns else None
    if i == 0 and not c.tail_high.is_zero:
        if first is None:
            first = _first_nonzero(c.tail_high, c.hi, 1)
        last = INFINITY
    if i == c.m and not c.tail_low.is_zero:
        if last is None:
            last = _first_nonzero(c.tail_low, c.lo, -1) + c.m
        first = -INFINITY
    if first is None:
        return None
    return first, last


def cohomology_range(c: CohomologyTable) -> CohomologyRange:
    """The tight bracketing sequences r and R of the nonzero display columns

    r_i is the first display column in which some row below i is nonzero and
    R_i is one past the last display column in which some row i or above is
    nonzero, so a nonzero entry in row i, display column D has
    r_(i+1) <= D < R_i. On supernatural tables r_i = R_i = z_i + i.
    """
    if not c.complete:
        raise WindowTooNarrow("the cohomology range needs a complete table")
    if c.is_zero:
        raise InvalidTable("the zero table has no cohomology range")
    extents = [_row_extent(c, i) for i in range(c.m + 1)]
    r: List[Bound] = []
    for i in range(1, c.m + 2):
        firsts = [extent[0] for extent in extents[:i] if extent is not None]
        r.append(min(firsts) if firsts else INFINITY)
    R: List[Bound] = []
    for i in range(c.m + 1):
        lasts = [extent[1] for extent in extents[i:] if extent is not None]
        R.append(max(lasts) + 1 if lasts else -INFINITY)
    return CohomologyRange(tuple(r), tuple(R))


def column_profile(c: CohomologyTable, column: int) -> Optional[List[int]]:
    """Rows with a nonzero entry in a display column, None when the table cannot tell"""
    try:
        return [i for i in range(c.m + 1) if c.display_value(i, column) != 0]
    except IncompleteTable:
        return None


def validate_cohomology(c: CohomologyTable) -> Diagnostics:
    diagnostics = Diagnostics('cohomology table')
    if c.is_zero:
        diagnostics.add("empty table")
        return diagnostics
    for (i, twist), value in sorted(c.values.items()):
        if value < 0:
            diagnostics.add(f"negative entry {value} at row {i}, twist {twist}")

    previous = None
    for column in range(c.lo, c.hi + 1):
        rows = column_profile(c, column)
        if rows is None:
            continue
        if not rows:
            diagnostics.add(f"display column {column} has no nonzero entry")
            continue
        if previous is not None:
            previous_column, previous_rows = previous
            if max(rows) > max(previous_rows):
                diagnostics.add(
                    f"M_d increases from {max(previous_rows)} to {max(rows)} "
                    f"between display columns {previous_column} and {column}")
            if min(rows) > min(previous_rows):
                diagnostics.add(
                    f"m_d increases from {min(previous_rows)} to {min(rows)} "
                    f"between display columns {previous_column} and {column}")
        previous = (column, rows)

    violation = first_negative_beyond(c.tail_high, c.hi, 1)
    if violation is not None:
        diagnostics.add(f"tail_high is negative at twist {violation}")
    violation = first_negative_beyond(c.tail_low, c.lo, -1)
    if violation is not None:
        diagnostics.add(f"tail_low is negative at twist {violation}")
    return diagnostics


def widen(c: CohomologyTable, window: Tuple[int, int]) -> CohomologyTable:
    """Re-window a table onto a window containing the old one"""
    lo, hi = window
    if lo > c.lo or hi < c.hi:
        raise InvalidArgument(f"window [{lo}, {hi}] does not contain [{c.lo}, {c.hi}]")
    if (lo, hi) == c.window:
        return c
    if not c.complete:
        raise IncompleteTable("only complete tables can be widened")
    values = {(i, twist): c.value(i, twist)
              for i in range(c.m + 1) for twist in range(lo, hi + 1)}
    return CohomologyTable(c.m, (lo, hi), values, c.tail_high, c.tail_low, c.complete)


def add_scaled(a: Table, coeff, b: Table) -> Table:
    """Entrywise a + coeff * b (tails included)"""
    coeff = to_fraction(coeff)
    if isinstance(a, BettiTable) and isinstance(b, BettiTable):
        if a.n != b.n:
            raise IncompatibleShapes(f"tables over {a.n} and {b.n} variables")
        entries = dict(a.entries)
        for cell, value in b.entries.items():
            entries[cell] = entries.get(cell, Fraction(0)) + coeff * value
        return BettiTable(a.n, entries)
    if isinstance(a, CohomologyTable) and isinstance(b, CohomologyTable):
        if a.m != b.m:
            raise IncompatibleShapes(f"tables over P^{a.m} and P^{b.m}")
        if a.window != b.window:
            raise IncompatibleShapes(f"windows {list(a.window)} and {list(b.window)} differ")
        values = dict(a.values)
        for cell, value in b.values.items():
            values[cell] = values.get(cell, Fraction(0)) + coeff * value
        scale = to_sympy(coeff)
        return CohomologyTable(
            a.m,
            a.window,
            values,
            a.tail_high + b.tail_high.mul_ground(scale),
            a.tail_low + b.tail_low.mul_ground(scale),
            a.complete and b.complete,
        )
    raise IncompatibleShapes(f"cannot add {type(b).__name__} to {type(a).__name__}")
