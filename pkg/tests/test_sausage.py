from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fatlab import sausage
from fatlab.complex import euler_characteristic, product_with_path


@pytest.mark.parametrize("N", [1, 2, 3])
def test_product_counts(sg1, N):
    assert product_with_path(sg1.complex, N).f_vector() == sausage.sausage_fvector((5, 10, 5), N)[0]


def test_limit():
    assert sausage.sausage_limit((5, 10, 5)) == 3
    # a core with f0 == f2 gives the limit at every N
    assert sausage.fatness_series((5, 10, 5), range(1, 6)) == [Fraction(3)] * 5


@given(st.integers(1, 6), st.integers(1, 500))
def test_limit_scale_invariant(g, m):
    assert sausage.sausage_limit(sausage.cover_core(g, m)) == 2 * g + 1


def test_increasing_with_lean_caps():
    cap = sausage.cap_fvector(6, 1)
    s = sausage.fatness_series((5, 10, 5), range(1, 40), cap, cap)
    assert all(a < b for a, b in zip(s, s[1:]))
    assert s[-1] < 3


@given(st.integers(1, 50), st.integers(0, 10 ** 6), st.integers(1, 20))
def test_sausage_euler_zero(g, V, N):
    core = sausage.cover_core(g)
    genus = 1 + core[0] * (g - 1)
    cap = sausage.cap_fvector(V, genus)
    f, _ = sausage.sausage_fvector(core, N, cap, cap)
    assert euler_characteristic(f) == 0


def test_accounting_g1():
    r = sausage.sausage_accounting(1)
    assert (r.q, r.n, r.cover_genus) == (5, 128, 1)
    assert r.cover_fvector == (640, 1280, 640)
    assert r.fvector == (8960, 18560, 10246, 646)
    assert r.fatness == Fraction(4801, 1601)
    assert r.to_json()["euler"] == 0


def test_accounting_search_upward():
    r = sausage.sausage_accounting(5)
    assert r.g == 6 and r.q == 25


def test_symbolic():
    a = sausage.symbolic_asymptotics()
    assert a.degrees == (12, 13, 13, 12)
    assert a.fatness_degree == 1
    assert a.exponent == Fraction(1, 12)
    assert a.genus_degree == 6
    for g in range(1, 21):
        assert sausage.sausage_accounting(g).fatness >= a.fatness_leading * sausage.sausage_accounting(g).g


def test_slice_exponent_changes_degree():
    a = sausage.symbolic_asymptotics(slice_exponent=12)
    assert a.degrees[0] == 17
