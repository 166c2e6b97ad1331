from fractions import Fraction

import pytest
from sympy import Poly, QQ

from bsfan.errors import (
    GapInColumns,
    IncompatibleShapes,
    IncompleteTable,
    InvalidArgument,
    InvalidTable,
    NotStrictlyIncreasing,
    WindowTooNarrow,
)
from bsfan.exact import d
from bsfan.samples import b_prime, b_x, canonical_curve_table, koszul_table, supernatural_example
from bsfan.supernatural import supernatural_table
from bsfan.tables import (
    INFINITY,
    BettiTable,
    Chain,
    CohomologyTable,
    DegreeSequence,
    RootSequence,
    add_scaled,
    cohomology_range,
    column_min_degrees,
    hilbert_function,
    hilbert_polynomial,
    is_chain,
    regularity,
    validate_betti,
    validate_cohomology,
    widen,
)
from bsfan.pure import hk_pure_table


def test_degree_sequence_must_increase():
    with pytest.raises(NotStrictlyIncreasing):
        DegreeSequence((0, 2, 1))
    with pytest.raises(NotStrictlyIncreasing):
        DegreeSequence(())
    assert DegreeSequence.parse("-1, 0,2,3").as_list() == [-1, 0, 2, 3]


def test_degree_sequence_order():
    assert DegreeSequence((0, 2, 3)) <= DegreeSequence((0, 2, 4))
    assert not DegreeSequence((0, 2, 4)) <= DegreeSequence((0, 2, 3))
    assert DegreeSequence((0, 2, 3)) < DegreeSequence((0, 2, 4))
    # A longer sequence sits below a shorter one it dominates termwise
    assert DegreeSequence((0, 1, 2, 3)) <= DegreeSequence((0, 2, 3))
    assert not DegreeSequence((0, 2, 3)) <= DegreeSequence((0, 1, 2, 3))
    # Incomparable pair
    assert not DegreeSequence((0, 3, 4)) <= DegreeSequence((1, 2, 5))
    assert not DegreeSequence((1, 2, 5)) <= DegreeSequence((0, 3, 4))


def test_degree_sequence_helpers():
    f = DegreeSequence((0, 2, 3))
    assert f.length == 2
    assert f.shifted(2).as_list() == [2, 4, 5]
    assert f.dual().as_list() == [-3, -2, 0]


def test_root_sequence():
    z = RootSequence.parse("3,-1,-4")
    assert z.m == 3
    assert RootSequence((3, -1, -4)) <= RootSequence((4, 0, -3))
    assert not RootSequence((3, -1)) <= RootSequence((4, 0, -3))
    with pytest.raises(InvalidArgument):
        RootSequence((1, 1))
    with pytest.raises(InvalidArgument):
        RootSequence(())


def test_chains():
    assert is_chain([DegreeSequence((0, 1)), DegreeSequence((0, 2)), DegreeSequence((1, 2))])
    assert not is_chain([DegreeSequence((0, 2)), DegreeSequence((0, 1))])
    assert is_chain([RootSequence((4, 0, -3)), RootSequence((3, -1, -4))])
    assert not is_chain([RootSequence((3, -1, -4)), RootSequence((4, 0, -3))])
    assert not is_chain([DegreeSequence((0, 1)), RootSequence((1, 0))])
    assert len(Chain([DegreeSequence((0, 1)), DegreeSequence((0, 2))])) == 2
    with pytest.raises(InvalidArgument):
        Chain([DegreeSequence((0, 2)), DegreeSequence((0, 1))])


def test_betti_table_from_display():
    b0 = canonical_curve_table()
    assert b0 == BettiTable.from_display(7, {0: [1], 1: [0, 10, 16], 2: [0, 0, 0, 16, 10], 3: [0, 0, 0, 0, 0, 1]})
    assert b0.value(3, 5) == 16
    assert b0.value(3, 4) == 0
    assert b0.columns() == [0, 1, 2, 3, 4, 5]
    assert b0.display_rows() == (0, 3)


def test_betti_table_drops_zero_entries():
    b = BettiTable(3, {(0, 0): 1, (1, 1): 0})
    assert b.cells() == [(0, 0)]
    with pytest.raises(InvalidTable):
        BettiTable(-1, {})


def test_validate_betti():
    assert validate_betti(canonical_curve_table()).ok
    assert not validate_betti(BettiTable(3, {(0, 0): 1, (4, 4): 1})).ok
    assert not validate_betti(BettiTable.zero(3)).ok
    diagnostics = validate_betti(BettiTable(3, {(0, 0): 1, (1, 1): -2}))
    assert not diagnostics.ok
    assert diagnostics.as_dict()['valid'] is False
    assert "negative" in diagnostics.issues[0]


def test_column_min_degrees():
    assert column_min_degrees(b_x(11)) == DegreeSequence((0, 2, 3, 4, 6, 8))
    d = DegreeSequence((0, 2, 3, 5, 6, 8))
    assert column_min_degrees(hk_pure_table(d, 7)) == d
    with pytest.raises(NotStrictlyIncreasing):
        column_min_degrees(BettiTable(3, {(0, 5): 1, (1, 5): 1}))
    with pytest.raises(GapInColumns):
        column_min_degrees(BettiTable(3, {(0, 0): 1, (2, 3): 1}))
    with pytest.raises(GapInColumns):
        column_min_degrees(BettiTable.zero(3))


def test_hilbert_polynomial():
    assert hilbert_polynomial(koszul_table(3)).is_zero
    assert hilbert_polynomial(canonical_curve_table()) == Poly(12 * d - 6, d, domain=QQ)
    assert hilbert_polynomial(b_prime()).is_zero


def test_hilbert_function():
    k = koszul_table(3)
    assert hilbert_function(k, 0) == 1
    assert all(hilbert_function(k, degree) == 0 for degree in range(1, 6))
    b0 = canonical_curve_table()
    # The canonical curve of genus 7 agrees with 12d - 6 from degree 2 on
    assert [hilbert_function(b0, degree) for degree in range(2, 6)] == [18, 30, 42, 54]


def test_regularity():
    assert regularity(canonical_curve_table()) == 3
    assert regularity(koszul_table(3)) == 0
    assert regularity(BettiTable.zero(2)) is None


def test_cohomology_table_lookup():
    c = supernatural_example()
    assert (c.lo, c.hi) == (-7, 5)
    # Row 0 above the window comes from the tail
    assert c.value(0, 6) == Fraction(3, 6) * 3 * 7 * 10
    # Row m below the window comes from the other tail
    assert c.value(3, -8) == Fraction(3, 6) * 11 * 7 * 4
    assert c.value(1, 20) == 0
    assert c.display_value(1, 2) == c.value(1, 1) == 10


def test_incomplete_tables_refuse_unknown_cells():
    c = CohomologyTable(2, (0, 1), {(0, 0): 1}, complete=False)
    assert c.value(0, 1) == 0
    with pytest.raises(IncompleteTable):
        c.value(1, 5)


def test_cohomology_table_rejects_bad_shapes():
    with pytest.raises(InvalidTable):
        CohomologyTable(0, (0, 1))
    with pytest.raises(InvalidTable):
        CohomologyTable(2, (1, 0))
    with pytest.raises(InvalidTable):
        CohomologyTable(2, (0, 1), {(3, 0): 1})
    with pytest.raises(InvalidTable):
        CohomologyTable(2, (0, 1), {(0, 4): 1})
    with pytest.raises(InvalidTable):
        CohomologyTable(1, (0, 1), tail_high=[0, 0, 1])


def test_cohomology_range_of_supernatural_table():
    bounds = cohomology_range(supernatural_example())
    assert bounds.r == (4, 1, -1, -INFINITY)
    assert bounds.R == (INFINITY, 4, 1, -1)
    assert bounds.r_at(1) == 4
    assert bounds.R_at(1) == 4


def test_cohomology_range_brackets_every_entry():
    c = CohomologyTable(2, (-2, 2), {(0, 1): 2, (1, 0): 1, (1, -1): 3, (2, -2): 1})
    bounds = cohomology_range(c)
    for (i, twist), _ in c.values.items():
        column = twist + i
        assert bounds.r_at(i + 1) <= column < bounds.R_at(i)
    assert bounds.R_at(1) == 2
    assert bounds.R_at(2) == 1


def test_cohomology_range_errors():
    with pytest.raises(InvalidTable):
        cohomology_range(CohomologyTable(2, (0, 1)))
    with pytest.raises(WindowTooNarrow):
        cohomology_range(CohomologyTable(2, (0, 1), {(1, 0): 1}, complete=False))


def test_validate_cohomology():
    assert validate_cohomology(supernatural_example()).ok
    gap = validate_cohomology(CohomologyTable(2, (0, 2), {(0, 0): 1, (0, 2): 1}))
    assert any("display column 1" in issue for issue in gap.issues)
    jump = validate_cohomology(CohomologyTable(2, (0, 1), {(0, 0): 1, (1, 0): 1}))
    assert any("M_d increases" in issue for issue in jump.issues)
    negative = validate_cohomology(CohomologyTable(1, (0, 0), {(0, 0): -1}))
    assert any("negative" in issue for issue in negative.issues)
    tail = validate_cohomology(CohomologyTable(1, (0, 0), {(0, 0): 1}, tail_high=[3, -1]))
    assert any("tail_high" in issue for issue in tail.issues)


def test_widen():
    z = RootSequence((3, -1, -4))
    assert widen(supernatural_example(), (-8, 6)) == supernatural_table(z, 3, (-8, 6))
    assert widen(supernatural_example(), (-7, 5)) is not None
    with pytest.raises(InvalidArgument):
        widen(supernatural_example(), (-6, 5))


def test_add_scaled():
    b = add_scaled(b_x(11), -1, b_x(11))
    assert b.is_zero
    twice = add_scaled(supernatural_example(), 1, supernatural_example())
    assert twice.value(0, 9) == 2 * supernatural_example().value(0, 9)
    with pytest.raises(IncompatibleShapes):
        add_scaled(b_x(11), 1, canonical_curve_table())
    with pytest.raises(IncompatibleShapes):
        add_scaled(supernatural_example(), 1, supernatural_table(RootSequence((3, -1, -4)), 3, (-8, 5)))
    with pytest.raises(IncompatibleShapes):
        add_scaled(b_x(11), 1, supernatural_example())
