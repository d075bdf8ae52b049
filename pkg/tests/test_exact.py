from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fatlab.exact import (PI, TWO_PI, AnglePi, GF, ModNum, QuadNum, angle_cmp, angle_sum, cos_exact,
                          cos_squared_and_sign, frac_str, gf_generator, gf_make, golden_ratio,
                          least_irreducible, prime_power, quad_sign, scalar_from_json, scalar_to_json)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=20)
quads = st.builds(lambda a, b: QuadNum(a, b, 5), fracs, fracs)


def test_golden_ratio_identity():
    phi = golden_ratio()
    assert phi * phi == phi + 1
    assert 1 / phi == phi - 1


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        QuadNum(1, 1, 5) + QuadNum(1, 1, 3)
    with pytest.raises(ValueError):
        QuadNum(1, 1, 4)


def test_sign_edge_cases():
    s5 = QuadNum.sqrt(5)
    assert quad_sign(s5 - 2) == 1
    assert quad_sign(s5 - 3) == -1
    assert quad_sign(QuadNum(0, 0)) == 0
    assert quad_sign(Fraction(-1, 3)) == -1


@given(quads, quads)
def test_field_ops(x, y):
    assert x + y - y == x
    assert (x * y) == (y * x)
    if y:
        assert (x / y) * y == x


@given(quads)
def test_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert quad_sign(x) == (1 if f > 0 else -1)


@given(quads)
def test_json_roundtrip(x):
    assert scalar_from_json(scalar_to_json(x)) == x


def test_frac_str():
    assert frac_str(Fraction(3221, 638)) == "3221/638"
    assert frac_str(Fraction(5)) == "5"


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(29) == (29, 1)
    assert prime_power(21) is None
    assert prime_power(1) is None


def test_least_irreducible_gf9():
    # x^2 + 1 is the least monic irreducible quadratic over F_3
    assert least_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29])
def test_generator_has_full_order(q):
    F = gf_make(q)
    a = gf_generator(F)
    assert a.order() == q - 1
    assert a ** ((q - 1) // 2) == -F.one


def test_gf9_generator_is_x_plus_1():
    F = gf_make(9)
    assert str(gf_generator(F)) == "x+1"


@given(st.integers(0, 8), st.integers(0, 8), st.integers(1, 8))
def test_gf9_field_axioms(i, j, k):
    F = GF(9)
    a, b, c = F.from_index(i), F.from_index(j), F.from_index(k)
    assert a * (b + c) == a * b + a * c
    assert (a * c) / c == a


def test_modnum():
    x = ModNum(5, 7)
    assert x + 3 == ModNum(1, 7)
    assert x * x.inverse() == ModNum(1, 7)
    with pytest.raises(ValueError):
        ModNum(1, 0)


def test_angles():
    assert angle_sum([AnglePi.of(1, 5)] * 10) == TWO_PI
    assert angle_cmp(AnglePi.of(3, 5) * 2, PI) == 1
    assert angle_cmp(AnglePi.of(1, 2) * 2, PI) == 0


def test_cos_values():
    s5 = QuadNum.sqrt(5)
    assert cos_exact(AnglePi.of(1, 3)) == Fraction(1, 2)
    assert cos_exact(AnglePi.of(3, 5)) == (1 - s5) / 4
    assert cos_squared_and_sign(AnglePi.of(3, 5)) == (((1 - s5) / 4) ** 2, -1)
    assert cos_squared_and_sign(AnglePi.of(1, 4)) == (Fraction(1, 2), 1)
    assert cos_exact(AnglePi.of(1, 7)) is None
