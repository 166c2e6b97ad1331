
import pytest
from hypothesis import given, settings, strategies as st

from bsfan.errors import IncompatibleShapes, InvalidArgument, WindowTooNarrow
from bsfan.exact import binomial
from bsfan.pairing import Functional, admitted, betti_functional, cohomology_functional, pair, pair_modified
from bsfan.pure import hk_pure_table
from bsfan.samples import koszul_table, monad_example, nonminimal_table, point_table
from bsfan.supernatural import monad_table, rank_gcd_bound, supernatural_table
from bsfan.tables import BettiTable, CohomologyTable, DegreeSequence, RootSequence

from tests.strategies import betti_cone_points, monads

EXAMPLE_DEGREES = DegreeSequence((-3, -1, 0, 1, 4))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_koszul_complex_of_a_shifted_field(n):
    assert pair(koszul_table(n, -1), point_table(n - 1, 0, 0)) == -n


def test_top_cohomology_point():
    for n in range(2, 5):
        assert pair(BettiTable(n, {(n, 0): 1}), point_table(n, n, 0)) == 1


def test_pairing_with_zero_tables():
    assert pair(BettiTable.zero(3), monad_example()) == 0
    assert pair(nonminimal_table(), CohomologyTable(2, (0, 0))) == 0


def test_modified_pairing_of_a_nonminimal_resolution():
    assert pair_modified(nonminimal_table(), monad_example(), 0, 1) == -4


def test_modified_pairing_vanishes_below_the_facet():
    koszul = hk_pure_table(DegreeSequence((-1, 0, 1, 2)), 3)
    assert pair_modified(koszul, monad_example(), 0, 1) == 0


def test_modified_pairing_vanishes_far_above():
    b = hk_pure_table(DegreeSequence((0, 2, 3, 4)), 3)
    assert pair_modified(b, monad_example(), 0, 1) == 0


def test_modifier_validation():
    with pytest.raises(InvalidArgument):
        pair_modified(nonminimal_table(), monad_example(), 0, 3)
    with pytest.raises(InvalidArgument):
        betti_functional(monad_example(), cutoff=0, window=(-4, 2))


def test_admitted_regions():
    # j below tau always counts
    assert admitted(0, 0, 5, 0, 1)
    # j = tau counts while k <= cutoff + (i - tau)
    assert admitted(1, 1, 0, 0, 1)
    assert not admitted(1, 1, 1, 0, 1)
    assert admitted(2, 1, 1, 0, 1)
    assert not admitted(2, 1, 2, 0, 1)
    assert not admitted(2, 2, 0, 0, 1)
    # j <= i - 2 always counts
    assert admitted(3, 1, 10, 0, 1)
    assert not admitted(3, 2, 10, 0, 1)
    assert not admitted(1, 2, 0, None, None)


def test_modified_betti_functional_is_the_upper_equation(upper_u):
    assert betti_functional(monad_example(), 0, 1, (-4, 2)) == upper_u


def test_unmodified_betti_functional(upper_u):
    expected = dict(upper_u.coefficients)
    expected.update({(1, 1): 4, (2, 2): -3, (1, 2): 3})
    assert betti_functional(monad_example(), window=(-4, 2)).coefficients == expected


def test_zero_cohomology_table_gives_zero_functional():
    assert betti_functional(CohomologyTable(2, (0, 0)), window=(-2, 2)).is_zero


def test_functional_evaluation_matches_the_pairing():
    functional = betti_functional(monad_example(), 0, 1, (-4, 2))
    assert functional.evaluate(nonminimal_table()) == -4
    assert betti_functional(monad_example(), window=(-4, 2)).evaluate(nonminimal_table()) == \
        pair(nonminimal_table(), monad_example())


def test_cohomology_functional(cohomology_facet_coefficients):
    functional = cohomology_functional(EXAMPLE_DEGREES, -1, 2)
    assert functional == Functional('cohomology', cohomology_facet_coefficients, (-4, 3), 3)


def test_unmodified_cohomology_functional(cohomology_facet_coefficients):
    expected = dict(cohomology_facet_coefficients)
    expected.update({(2, -1): -35, (2, 0): 70, (3, -4): -2, (3, -1): 35})
    assert cohomology_functional(EXAMPLE_DEGREES).coefficients == expected


def test_koszul_cohomology_functional():
    n = 3
    functional = cohomology_functional(DegreeSequence(tuple(range(n + 1))))
    for i in range(n + 1):
        for j in range(min(i, n - 1) + 1):
            assert functional.value(j, -i) == (-1) ** (i - j) * binomial(n, i)


def test_cohomology_functional_evaluates_like_the_pairing():
    c = supernatural_table(RootSequence((3, 0, -4)))
    b = hk_pure_table(EXAMPLE_DEGREES, 4)
    assert cohomology_functional(EXAMPLE_DEGREES).evaluate(c) == pair(b, c)
    assert cohomology_functional(EXAMPLE_DEGREES, -1, 2).evaluate(c) == pair_modified(b, c, -1, 2)


def test_functional_window_checks():
    with pytest.raises(WindowTooNarrow):
        Functional('betti', {(0, 5): 1}, (-1, 1), 3)
    with pytest.raises(WindowTooNarrow):
        betti_functional(monad_example(), window=(-1, 1)).evaluate(hk_pure_table(DegreeSequence((0, 3)), 3))
    with pytest.raises(InvalidArgument):
        Functional('sideways', {}, (0, 0), 1)
    with pytest.raises(IncompatibleShapes):
        betti_functional(monad_example(), window=(-1, 1)).evaluate(monad_example())


def test_functional_scaling():
    functional = Functional('betti', {(0, 0): 6, (1, 1): -8}, (0, 0), 1)
    primitive = functional.primitive()
    assert primitive.coefficients == {(0, 0): 3, (1, 1): -4}
    assert functional.scaled(0).is_zero


@settings(max_examples=500)
@given(st.data())
def test_pairing_is_nonnegative_on_cone_points(data):
    b, _ = data.draw(betti_cone_points(max_variables=5, max_parts=3))
    z, a = data.draw(monads(b.n - 1))
    monad = monad_table(z, rank_gcd_bound(z), a)
    assert pair(b, monad) >= 0
    tau = data.draw(st.integers(0, b.n - 1))
    cutoff = data.draw(st.integers(-6, 10))
    assert pair_modified(b, monad, cutoff, tau) >= 0
