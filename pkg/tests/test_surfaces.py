import pytest

from fatlab import surfaces
from fatlab.complex import fatness2, is_regular, is_strongly_regular, star


@pytest.mark.parametrize("g", [1, 3])
def test_perfect_cellulation(g):
    S = surfaces.build_sg(g)
    assert S.f_vector() == (1, 2 * g, 1)
    assert fatness2(S.f_vector()) == g
    assert not is_regular(S)[0]
    with pytest.raises(ValueError):
        surfaces.build_sg(0)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 7])
def test_cover_structure(g):
    C = surfaces.build_sg_prime(g)
    q = 4 * g + 1
    assert C.complex.f_vector() == (q, 2 * g * q, q)
    r = surfaces.verify_cover_structure(C)
    assert r.ok, r.failures()
    assert C.alpha ** (2 * g) == -C.field.one


def test_not_prime_power():
    with pytest.raises(ValueError):
        surfaces.build_sg_prime(5)  # q = 21


def test_torus_faces(sg1):
    S = sg1.complex
    # each face misses exactly one vertex, so a vertex lies in four of the five faces
    faces = [c for c in star(S, 0) if S.cells[c].dim == 2]
    assert len(faces) == 4
    assert not is_strongly_regular(S)[0]


def test_labels_gf9(sg2):
    F = sg2.field
    s = F.zero
    labels = sg2.face_vertices(s)
    assert labels[0] == F.zero and labels[1] == F.one
    assert labels[2] == F.one + sg2.alpha
    assert len(set(labels)) == 8


def test_shared_vertices_g3():
    C = surfaces.build_sg_prime(3)
    S = C.complex
    a, b = S.by_dim[2][:2]
    shared = set(S.walk_vertices(a)) & set(S.walk_vertices(b))
    assert len(shared) - 2 == 9


def test_first_prime_power_genus():
    assert surfaces.first_prime_power_genus(5) == 6  # 21 fails, 25 = 5^2
    assert surfaces.first_prime_power_genus(1) == 1
