"""
Worked-example tables, available to the command line as "sample:<name>"
"""

from fractions import Fraction
from typing import Callable, Dict, List

from .errors import InvalidArgument
from .exact import binomial
from .pure import hk_pure_table
from .supernatural import monad_table, supernatural_table
from .tables import BettiTable, CohomologyTable, DegreeSequence, RootSequence, Table


def b_x(x) -> BettiTable:
    """The five-variable family with beta[2, 4] = beta[3, 4] = x; in the cone iff x <= 45/4"""
    x = Fraction(x)
    return BettiTable(5, {
        (0, 0): 1, (1, 2): 10, (2, 3): 16, (2, 4): x,
        (3, 4): x, (3, 5): 16, (4, 6): 10, (5, 8): 1,
    })


def canonical_curve_table() -> BettiTable:
    """Pure table of a general canonical curve of genus 7"""
    return hk_pure_table(DegreeSequence((0, 2, 3, 5, 6, 8)), 7)


def b_prime() -> BettiTable:
    return hk_pure_table(DegreeSequence((0, 2, 3, 4, 6, 8)), 5)


def koszul_table(n: int, shift: int = 0) -> BettiTable:
    """beta[i, i + shift] = binom(n, i): the Koszul complex resolving K(-shift)"""
    return BettiTable(n, {(i, i + shift): binomial(n, i) for i in range(n + 1)})


def nonminimal_table() -> BettiTable:
    """Display row -1 = (1, 3, 4, 1) plus beta[1, 1] = 1 over three variables"""
    return BettiTable.from_display(3, {-1: [1, 3, 4, 1], 0: [0, 1, 0, 0]})


def point_table(m: int, row: int, twist: int, value=1) -> CohomologyTable:
    """A complete table with a single nonzero entry"""
    return CohomologyTable(m, (twist, twist), {(row, twist): value})


def supernatural_example() -> CohomologyTable:
    return supernatural_table(RootSequence((3, -1, -4)), 3, (-7, 5))


def monad_example() -> CohomologyTable:
    """Monad of roots (1, -3), rank 2, a = 1"""
    return monad_table(RootSequence((1, -3)), 2, 1)


SAMPLE_TABLES: Dict[str, Callable[[], Table]] = {
    'b9': lambda: b_x(9),
    'b11': lambda: b_x(11),
    'b12': lambda: b_x(12),
    'b0': canonical_curve_table,
    'bprime': b_prime,
    'koszul3': lambda: koszul_table(3),
    'nonminimal': nonminimal_table,
    'supernatural': supernatural_example,
    'monad': monad_example,
}


def list_samples() -> List[str]:
    return sorted(SAMPLE_TABLES)


def get_sample(name: str) -> Table:
    """Build the named sample table"""
    if name not in SAMPLE_TABLES:
        raise InvalidArgument(f"unknown sample {name!r}; available: {', '.join(list_samples())}")
    return SAMPLE_TABLES[name]()
