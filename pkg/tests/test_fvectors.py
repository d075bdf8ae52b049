from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fatlab import fvectors as fv
from fatlab.complex import FVector, euler_check, fatness3


def test_steinitz():
    assert fv.steinitz_check((4, 6, 4))
    assert fv.steinitz_check((8, 12, 6))
    assert not fv.steinitz_check((5, 9, 5))
    with pytest.raises(ValueError):
        fv.steinitz_check((1, 2, 3, 4))


def test_e_construction():
    assert fv.e_fvector_from_simple((16, 32, 24, 8)) == (FVector((24, 96, 96, 24)), Fraction(4))
    fE, phi = fv.e_fvector_from_simple((600, 1200, 720, 120))
    assert fE == (720, 3600, 3600, 720) and phi == 5
    assert fv.e_fvector_from_simplicial((5, 10, 10, 5))[0] == (10, 30, 30, 10)
    assert fv.e_fvector_from_simplicial((9, 27, 36, 18))[0] == (27, 108, 108, 27)
    with pytest.raises(ValueError):
        fv.e_fvector_from_simple((5, 10, 10, 6))


@given(st.integers(5, 500), st.integers(0, 400))
def test_dual_routes_agree(f0, extra):
    # simplicial: f2 = 2 f3 and Euler; parametrize by f0 and f3
    f3 = f0 + extra
    f1 = f0 + f3
    fQ = (f0, f1, 2 * f3, f3)
    assert fv.simplicial_ds_check(fQ)
    a = fv.e_fvector_from_simplicial(fQ)
    b = fv.e_fvector_from_simple(FVector(fQ).reversed())
    assert a == b
    assert fatness3(a[0]) == a[1]


@given(st.integers(1, 200), st.integers(1, 200))
def test_simple_fatness_below_three(f0, f3):
    assert fv.fatness_of_simple((f0, 2 * f0, f0 + f3, f3)) < 3


def test_neighborly_cubical():
    f, phi = fv.neighborly_cubical_fvector(10)
    assert phi == Fraction(11, 3) == fatness3(f)
    assert euler_check(f)


@pytest.mark.parametrize("n", range(1, 8))
def test_cross_chain(n):
    base, filled, fE, phi = fv.cross_chain_fvectors(n)
    assert euler_check(base) and euler_check(filled)
    assert filled == (12 * n - 4, 54 * n - 30, 84 * n - 52, 42 * n - 26)
    assert fv.simplicial_ds_check(filled)
    assert not euler_check(fv.FILLED_CROSS_CHAIN_PRINTED(n))


def test_family_algebra():
    assert fv.FILLED_CROSS_CHAIN.euler_identically_zero()
    assert not fv.FILLED_CROSS_CHAIN_PRINTED.euler_identically_zero()
    assert fv.cross_chain_fvectors(2)[2] == (78, 348, 348, 78)
    assert fv.family_limit_fatness_e(fv.FILLED_CROSS_CHAIN) == Fraction(14, 3)
    assert fv.family_limit_fatness_e(fv.CUT600_CHAIN) == Fraction(560, 111)
    assert fv.family_limit_kissing(fv.CUT600_CHAIN) == Fraction(666, 53)
    assert fv.CUT600_CHAIN(1) == (120, 720, 1200, 600)


def test_corona():
    f, phi, kappa = fv.corona_fvector(697, 792, 96)
    assert f == (72840, 459360, 773040, 386520)
    assert phi == Fraction(3221, 638)
    assert kappa == Fraction(7656, 607)
    assert fv.below_kissing_bound(kappa)
    assert fv.decimal(phi) == "5.048589"
    # the printed cap facet count would contradict the printed f3
    assert fv.corona_fvector(697, 792, 96, cap_facets=30)[0][3] == 370680
    with pytest.raises(ValueError):
        fv.corona_fvector(0, 0, 0)


def test_kissing_bound():
    b = fv.kissing_bound()
    assert f"{float(b):.5f}" == "14.92820"
    assert fv.below_kissing_bound(Fraction(1492, 100))
    assert not fv.below_kissing_bound(Fraction(1493, 100))
