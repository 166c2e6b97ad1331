#!/usr/bin/env python3
"""
Diagnostic tool that re-derives the bundled worked examples
Run this after changing any algorithm; exits 0 only if every check passes
"""

import os
import sys
from fractions import Fraction
from typing import Callable, List, Tuple

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from bsfan.bounds import multiplicity_bounds, slope_bounds
from bsfan.decompose import decompose_betti, is_in_cone
from bsfan.facets import facet_from_supernatural, upper_facet_equation
from bsfan.pairing import pair_modified
from bsfan.pure import hk_pure_table, multiplicity
from bsfan.samples import b_x, monad_example, nonminimal_table, supernatural_example
from bsfan.supernatural import multinomial_rank, rank_gcd_bound, schur_rank
from bsfan.tables import DegreeSequence, RootSequence


def _pure_values(degrees, n) -> List[Fraction]:
    table = hk_pure_table(DegreeSequence(degrees), n)
    return [table.value(i, d) for i, d in enumerate(degrees)]


def _b11_parts():
    return [(coeff, skeleton.as_list()) for coeff, skeleton in decompose_betti(b_x(11)).pairs()]


def _ranks(roots):
    z = RootSequence(roots)
    return rank_gcd_bound(z), multinomial_rank(z), schur_rank(z)


def _facet_agreement(degrees, tau, rows) -> bool:
    return facet_from_supernatural(DegreeSequence(degrees), tau, rows, check=False) == \
        upper_facet_equation(DegreeSequence(degrees), tau, rows)


CHECKS: List[Tuple[str, Callable[[], bool]]] = [
    ("pure table (0,2,3,4,6,8), n = 5",
     lambda: _pure_values((0, 2, 3, 4, 6, 8), 5) == [5, 60, 128, 90, 20, 3]),
    ("pure table (0,2,3,5,6,8), n = 7",
     lambda: _pure_values((0, 2, 3, 5, 6, 8), 7) == [1, 10, 16, 16, 10, 1]),
    ("B11 decomposition",
     lambda: _b11_parts() == [(Fraction(11, 90), [0, 2, 3, 4, 6, 8]),
                              (Fraction(1, 45), [0, 2, 3, 5, 6, 8]),
                              (Fraction(11, 90), [0, 2, 4, 5, 6, 8])]),
    ("B12 lies outside the cone", lambda: not is_in_cone(b_x(12)).in_cone),
    ("supernatural (3,-1,-4) entries",
     lambda: [supernatural_example().value(i, d) for i, d in
              ((3, -7), (3, -6), (3, -5), (2, -3), (2, -2), (1, 0), (1, 1), (1, 2), (0, 4), (0, 5))]
     == [90, 45, 16, 6, 5, 6, 10, 9, 20, 54]),
    ("rank trio (2,1,-2,-3)", lambda: _ranks((2, 1, -2, -3)) == (2, 6, 20)),
    ("rank trio (4,3,0,-6,-7,-9)", lambda: _ranks((4, 3, 0, -6, -7, -9)) == (15, 180, 1216215)),
    ("modified pairing of the non-minimal table",
     lambda: pair_modified(nonminimal_table(), monad_example(), 0, 1) == -4),
    ("facet constructions agree on (-1,0,2,3)", lambda: _facet_agreement((-1, 0, 2, 3), 1, (-4, 2))),
    ("facet constructions agree on (-4,-3,0,2,4,6,7,9)",
     lambda: _facet_agreement((-4, -3, 0, 2, 4, 6, 7, 9), 3, (-6, 3))),
    ("multiplicity bounds of B9",
     lambda: (lambda bounds: (bounds.lower, bounds.upper) == (Fraction(48, 5), 16)
              and bounds.brackets(multiplicity(b_x(9), 5)))(multiplicity_bounds(b_x(9), 5))),
    ("slope bounds of the supernatural example",
     lambda: (lambda s: s.lower == s.mu == s.upper == Fraction(-4, 3))(slope_bounds(supernatural_example()))),
]


def run_checks() -> List[Tuple[str, bool, str]]:
    """Run every check, catching failures so the rest still run"""
    results = []
    for name, check in CHECKS:
        try:
            results.append((name, bool(check()), ""))
        except Exception as e:
            results.append((name, False, f"{type(e).__name__}: {e}"))
    return results


def main():
    """Main entry point"""
    print("🔍 Re-deriving worked examples")
    results = run_checks()
    for name, ok, detail in results:
        status = "✅" if ok else "❌"
        suffix = f" ({detail})" if detail else ""
        print(f"   {status} {name}{suffix}")
    passed = sum(1 for _, ok, _ in results if ok)
    print(f"📊 {passed}/{len(results)} checks passed")
    sys.exit(0 if passed == len(results) else 1)


if __name__ == "__main__":
    main()
