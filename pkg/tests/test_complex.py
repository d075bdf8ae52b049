from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fatlab.complex import (Cell, CellComplex, FVector, cube_boundary, dual_graph, euler_check, fatness2,
                            fatness3, flag_vector, from_json, is_regular, is_strongly_regular, link,
                            product_fvector, product_with_path, simplex_boundary, star, subcomplex,
                            tetrahedron_surface, to_json)
from fatlab.surfaces import build_sg


def test_fatness_values():
    assert fatness3((5, 10, 10, 5)) == 2
    assert fatness3((16, 32, 24, 8)) == Fraction(7, 3)
    assert fatness2((1, 6, 1)) == 3
    with pytest.raises(ZeroDivisionError):
        fatness3((0, 1, 1, 0))
    with pytest.raises(ValueError):
        fatness3((1, 2, 3))


@given(st.lists(st.integers(1, 10_000), min_size=4, max_size=4))
def test_fatness_dual_symmetric(f):
    assert fatness3(f) == fatness3(FVector(f).reversed())


def test_euler_defaults():
    assert euler_check((4, 6, 4))
    assert euler_check((120, 720, 1200, 600))
    assert not euler_check((9, 28, 38, 18))


def test_tetrahedron_surface():
    T = tetrahedron_surface()
    assert T.f_vector() == (4, 6, 4)
    assert is_regular(T)[0]
    assert is_strongly_regular(T) == (True, None)


def test_grading_validated():
    with pytest.raises(ValueError):
        CellComplex([Cell(0, 0, frozenset()), Cell(1, 1, frozenset({5}))])


def test_cube_flags():
    Q = cube_boundary(4)
    assert Q.f_vector() == (16, 32, 24, 8)
    assert flag_vector(Q, (0, 1, 3)) == 192
    assert flag_vector(Q, (0, 3)) == 64
    assert flag_vector(Q, (0,)) == 16
    assert is_strongly_regular(Q)[0]
    with pytest.raises(ValueError):
        flag_vector(Q, (1, 0))


def test_simplex_full_flags():
    X = simplex_boundary(4)
    assert X.f_vector() == (5, 10, 10, 5)
    assert flag_vector(X, (0, 1, 2, 3)) == 120


def test_flag_03_is_facet_vertex_sum():
    Q = cube_boundary(4)
    assert flag_vector(Q, (0, 3)) == sum(len(Q.vertex_sets[f]) for f in Q.by_dim[3])


def test_sg_is_not_regular():
    S = build_sg(2)
    assert S.f_vector() == (1, 4, 1)
    assert not is_regular(S)[0]
    with pytest.raises(ValueError):
        is_strongly_regular(S)
    assert star(S, 0) == frozenset(range(len(S)))


def test_dual_graph_of_tetrahedron():
    D = dual_graph(tetrahedron_surface())
    assert D.number_of_nodes() == 4 and D.number_of_edges() == 6


def test_link_of_simplex_vertex():
    X = simplex_boundary(4)
    assert subcomplex(X, link(X, 0))[0].f_vector() == (4, 6, 4)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4))
def test_product_formula(N):
    T = tetrahedron_surface()
    P = product_with_path(T, N)
    assert P.f_vector() == product_fvector(T.f_vector(), N)
    assert is_strongly_regular(P)[0]


def test_product_of_non_strongly_regular_cover(sg1):
    P = product_with_path(sg1.complex, 2)
    assert P.f_vector() == product_fvector((5, 10, 5), 2)
    assert not is_strongly_regular(P)[0]


def test_json_roundtrip(sg1):
    for X in (cube_boundary(4), sg1.complex, build_sg(1)):
        Y = from_json(to_json(X))
        assert to_json(Y) == to_json(X)
