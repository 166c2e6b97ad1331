"""
bsfan: exact Boij-Soederberg computations
Pure and supernatural tables, greedy decompositions, pairings and facet equations
"""

__version__ = "1.0.0"

from .errors import BSFanError
from .tables import BettiTable, Chain, CohomologyTable, DegreeSequence, RootSequence
from .pure import hk_pure_table
from .supernatural import supernatural_table
from .decompose import decompose_betti, decompose_cohomology, is_in_cone
from .pairing import Functional, pair, pair_modified
from .facets import upper_facet_equation, lower_facet_equation

__all__ = [
    'BSFanError',
    'BettiTable',
    'Chain',
    'CohomologyTable',
    'DegreeSequence',
    'RootSequence',
    'Functional',
    'hk_pure_table',
    'supernatural_table',
    'decompose_betti',
    'decompose_cohomology',
    'is_in_cone',
    'pair',
    'pair_modified',
    'upper_facet_equation',
    'lower_facet_equation',
]
