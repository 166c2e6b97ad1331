from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from bsfan.pairing import Functional

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


def display_functional(rows, window, n):
    """Betti-side functional from display rows: rows[l][i] is the coefficient of beta[i, i + l]"""
    coefficients = {}
    for row, values in rows.items():
        for i, value in enumerate(values):
            if value:
                coefficients[(i, i + row)] = Fraction(value)
    return Functional('betti', coefficients, window, n)


@pytest.fixture
def upper_u():
    """Upper equation of the facet at (-1, 0, 2, 3), tau = 1"""
    return display_functional({
        -4: [21, -12, 5, 0],
        -3: [12, -5, 0, 3],
        -2: [5, 0, -3, 4],
        -1: [0, 3, -4, 3],
    }, (-4, 2), 3)


@pytest.fixture
def lower_l():
    """Lower equation of the same facet"""
    return display_functional({
        0: [3, -4, 3, 0],
        1: [4, -3, 0, 5],
        2: [3, 0, -5, 12],
    }, (-4, 2), 3)


@pytest.fixture
def eight_term_facet():
    """Upper equation of the facet at (-4, -3, 0, 2, 4, 6, 7, 9), tau = 3, on rows -6..3"""
    return display_functional({
        -6: [1755, -385, 0, 0, 66, -70, 0, 100],
        -5: [385, 0, 0, -66, 70, 0, -100, 175],
        -4: [0, 0, 66, -70, 0, 100, -175, 189],
        -3: [0, 0, 70, 0, -100, 175, -189, 140],
        -2: [0, 0, 0, 100, -175, 189, -140, 60],
        -1: [0, 0, 0, 175, -189, 140, -60, 0],
        0: [0, 0, 0, 0, 0, 60, 0, 0],
        1: [0, 0, 0, 0, 0, 0, 0, 44],
    }, (-6, 3), 7)


@pytest.fixture
def cohomology_facet_coefficients():
    """Modified coefficients of gamma(j, d) for the pure table of (-3, -1, 0, 1, 4), cutoff -1, tau 2"""
    return {
        (0, -4): 2, (0, -1): -35, (0, 0): 70, (0, 1): -42, (0, 3): 5,
        (1, -4): -2, (1, -1): 35, (1, 0): -70, (1, 1): 42,
        (2, -4): 2,
    }


@pytest.fixture
def clean_env(monkeypatch):
    for name in ('BSFAN_SETTINGS', 'BSFAN_OUTPUT', 'BSFAN_LOG_LEVEL', 'BSFAN_ZERO_SYMBOL',
                 'BSFAN_STRICT_WINDOW', 'BSFAN_FACET_METHOD'):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
