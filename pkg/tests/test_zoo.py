from fractions import Fraction

import pytest

from fatlab import zoo
from fatlab.complex import euler_check, is_strongly_regular
from fatlab.exact import QuadNum

S5 = QuadNum.sqrt(5)


def test_simplex_and_cross():
    M, L = zoo.build_simplex4()
    assert L.f_vector() == (5, 10, 10, 5)
    assert zoo.check_edge_tangent(M, L) == (True, Fraction(3, 10))
    assert zoo.dihedral_spectrum(L, M.r2) == {(Fraction(1, 4), 1): 10}
    M, L = zoo.build_cross4()
    assert L.f_vector() == (8, 24, 32, 16)
    assert zoo.check_edge_tangent(M, L) == (True, Fraction(1, 2))
    assert zoo.dihedral_spectrum(L, M.r2) == {(Fraction(0), 0): 32}


def test_cube_tangent_radius():
    # edge midpoints of the {+-1}^4 cube sit at squared distance 3
    M, L = zoo.build_cube4()
    assert L.f_vector() == (16, 32, 24, 8)
    assert M.r2 == 3
    assert zoo.check_edge_tangent(M, L)[0]


def test_binary_icosahedral():
    V = zoo.binary_icosahedral()
    assert len(V) == 120
    assert sum(zoo.is_hurwitz(v) for v in V) == 24
    assert all(sum(x * x for x in v) == 1 for v in V)


def test_600cell(model600):
    M, L = model600
    assert L.f_vector() == (120, 720, 1200, 600)
    assert zoo.verify_hyperplanes(M, L)
    ok, r2 = zoo.check_edge_tangent(M, L)
    assert ok and r2 == (5 + 2 * S5) / (6 + 2 * S5) == 1 - 1 / (4 * zoo.PHI ** 2)
    assert set(zoo.dihedral_spectrum(L, r2)) == {(((1 - S5) / 4) ** 2, -1)}
    X = L.complex
    assert {sum(1 for f in X.by_dim[3] if v in X.vertex_sets[f]) for v in X.by_dim[0]} == {20}
    assert {sum(1 for e in X.by_dim[1] if v in X.vertex_sets[e]) for v in X.by_dim[0]} == {12}


def test_one_cut():
    M, L = zoo.cut_600cell((0,))
    f = L.f_vector()
    assert f == (119, 708, 1170, 581)
    assert euler_check(f)
    assert zoo.cap_fvector() == (13, 42, 50, 21)
    assert zoo.CAP_SIMPLICIAL_FACETS == zoo.cap_fvector()[3] - 1
    spectrum = zoo.dihedral_spectrum(L, M.r2)
    assert (((1 - S5) / 4) ** 2, 1) in spectrum


def test_snub24():
    M, L = zoo.build_snub24()
    assert L.f_vector() == (96, 432, 480, 144)
    assert sum(1 for r in L.ridges() if zoo.ridge_kind(L, r) == "ico-ico") == 96
    assert zoo.check_edge_tangent(M, L)[0]
    spectrum = zoo.ridge_dihedrals(L, M.r2)
    ico = {spectrum[r] for r in L.ridges() if zoo.ridge_kind(L, r) == "ico-ico"}
    assert ico == {(((1 + S5) / 4) ** 2, 1)}


def test_snub_matches_24_cuts():
    _, L = zoo.cut_600cell(tuple(zoo.hurwitz_indices()))
    assert L.f_vector() == (96, 432, 480, 144)


@pytest.mark.parametrize("name", ["simplex", "cross", "cube"])
def test_small_lattices_strongly_regular(name):
    _, L = zoo.ZOO[name]()
    assert is_strongly_regular(L.complex)[0]


def test_lattice_json(model600):
    M, L = model600
    data = L.to_json()
    assert len(data["hyperplanes"]) == 600
    assert M.to_json()["r2"] == {"a": "5/8", "b": "1/8", "d": 5}
