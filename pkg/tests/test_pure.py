from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bsfan.errors import InvalidArgument, MomentsNonzero
from bsfan.exact import primitive_factor
from bsfan.pure import (
    construction_generators,
    hk_moments_check,
    hk_pure_table,
    moments,
    multiplicity,
    pure_ratio_table,
    pure_summary,
    pure_values,
)
from bsfan.samples import b_prime, canonical_curve_table, koszul_table
from bsfan.tables import BettiTable, DegreeSequence

from tests.strategies import degree_sequences


@pytest.mark.parametrize("degrees, n, values", [
    ((0, 2, 3, 4, 6, 8), 5, [5, 60, 128, 90, 20, 3]),
    ((0, 1, 2, 3), 3, [1, 3, 3, 1]),
    ((0, 2, 3, 5, 6, 8), 7, [1, 10, 16, 16, 10, 1]),
])
def test_hk_pure_table(degrees, n, values):
    table = hk_pure_table(DegreeSequence(degrees), n)
    assert [table.value(i, d) for i, d in enumerate(degrees)] == values
    assert len(table.cells()) == len(degrees)


def test_pure_table_needs_enough_variables():
    with pytest.raises(InvalidArgument):
        hk_pure_table(DegreeSequence((0, 1, 2)), 1)


def test_pure_ratio_table():
    assert pure_ratio_table(DegreeSequence((-1, 0, 1, 3))) == [
        Fraction(1, 8), Fraction(1, 3), Fraction(1, 4), Fraction(1, 24)]
    assert pure_values(DegreeSequence((-1, 0, 1, 3))) == [3, 8, 6, 1]


@pytest.mark.parametrize("degrees, expected", [
    ((0, 1, 2, 3), 1),
    ((0, 1, 2, 3, 4, 5), 1),
    ((0, 2, 3, 4, 6, 8), 35),
    ((0, 2, 3, 5, 6, 8), 28),
])
def test_construction_generators(degrees, expected):
    assert construction_generators(DegreeSequence(degrees)) == expected


@given(degree_sequences(2, 6))
def test_construction_generators_is_a_multiple_of_the_primitive_table(d):
    assert construction_generators(d) % pure_values(d)[0] == 0


def test_moment_checks():
    assert hk_moments_check(hk_pure_table(DegreeSequence((0, 2, 3, 4, 6, 8)), 5), 5)
    assert hk_moments_check(canonical_curve_table(), 5)
    assert not hk_moments_check(canonical_curve_table(), 6)
    assert not hk_moments_check(BettiTable(1, {(0, 0): 1}), 1)


@given(degree_sequences(2, 7))
def test_pure_tables_satisfy_the_moment_equations(d):
    table = hk_pure_table(d, d.length)
    assert all(m == 0 for m in moments(table, d.length))
    assert moments(table, d.length + 1)[d.length] != 0


def test_multiplicity():
    for n in range(1, 6):
        assert multiplicity(koszul_table(n), n) == 1
    assert multiplicity(canonical_curve_table(), 5) == 12
    assert multiplicity(b_prime(), 5) == 48
    with pytest.raises(MomentsNonzero):
        multiplicity(BettiTable(1, {(0, 0): 1}), 1)


@given(degree_sequences(2, 6, first=0))
def test_multiplicity_of_pure_tables(d):
    table = hk_pure_table(d, d.length)
    product = 1
    for x in d.entries[1:]:
        product *= x
    expected = table.value(0, 0) * Fraction(product)
    for k in range(1, d.length + 1):
        expected /= k
    assert multiplicity(table, d.length) == expected


def test_pure_summary():
    summary = pure_summary(DegreeSequence((0, 2, 3, 4, 6, 8)), 5)
    assert summary['values'] == [5, 60, 128, 90, 20, 3]
    assert summary['multiplicity'] == 48
    assert summary['generators'] == 35
    assert 'generators' not in pure_summary(DegreeSequence((0, 2, 3)), 5)


def _values(d: DegreeSequence, n: int):
    table = hk_pure_table(d, n)
    return [table.value(i, x) for i, x in enumerate(d)]


@given(degree_sequences(2, 6), st.integers(-5, 5))
def test_shifting_the_degrees_keeps_the_entries(d, t):
    assert _values(d.shifted(t), d.length) == _values(d, d.length)


@given(degree_sequences(2, 6))
def test_dual_degrees_reverse_the_entries(d):
    assert d.dual() == DegreeSequence(tuple(-x for x in reversed(d.entries)))
    assert _values(d.dual(), d.length) == list(reversed(_values(d, d.length)))


@given(degree_sequences(2, 6), st.integers(0, 2))
def test_pure_tables_are_primitive(d, extra):
    values = _values(d, d.length + extra)
    assert all(v > 0 and v.denominator == 1 for v in values)
    assert primitive_factor(values) == 1
