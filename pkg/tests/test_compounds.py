import pytest

from fatlab import compounds as cp
from fatlab import fvectors as fv
from fatlab.complex import FVector
from fatlab.exact import TWO_PI, AnglePi


def test_atom_link_polygons():
    T = cp.atom_types()
    assert T["simplex"].link_polygon == (AnglePi.of(1, 3),) * 3
    assert T["cross"].link_polygon == (AnglePi.of(1, 2),) * 4
    assert T["600cell"].link_polygon == (AnglePi.of(3, 5),) * 5
    assert all(t.link_angle_sum_ok() for t in T.values())


def test_atom_dihedrals_from_geometry():
    assert cp.atom_dihedrals("simplex") == {"simplex-simplex": {AnglePi.of(1, 3)}}
    assert cp.atom_dihedrals("cross") == {"cross-cross": {AnglePi.of(1, 2)}}


def test_compound_rejects_overuse():
    a = cp.simplex_atom(range(5))
    with pytest.raises(ValueError):
        cp.Compound([])
    with pytest.raises(ValueError):
        cp.Compound([a, a])


def test_simplex_compounds():
    res = cp.classify_simplex_compounds()
    fs = sorted(cp.simplex_compound_fvectors(res))
    assert fs == [FVector((5, 10, 10, 5)), FVector((6, 14, 16, 8)), FVector((9, 27, 36, 18))]
    assert fv.e_fvector_from_simplicial(fs[-1])[0] == (27, 108, 108, 27)
    assert res.frontier_sizes == [1] * len(res.frontier_sizes)


def test_canonical_form_relabel_invariant():
    a = (frozenset(range(5)), frozenset({1, 2, 3, 4, 5}))
    b = (frozenset({10, 11, 12, 13, 14}), frozenset({9, 10, 11, 12, 13}))
    assert cp.canonical_form(a) == cp.canonical_form(b)


def test_cross_with_simplices():
    # adjacent facets differ in one sign: the ridge between the two simplices is reflex
    adj = cp.cross_with_simplices([(1, 1, 1, 1), (1, 1, 1, -1)])
    assert cp.check_convex(adj).counts()["reflex"] == 1
    far = cp.cross_with_simplices([(1, 1, 1, 1), (1, 1, -1, -1)])
    assert cp.check_convex(far).convex


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cross_chain(n):
    C = cp.build_cross_chain(n)
    assert cp.compound_fvector(C) == fv.FILLED_CROSS_CHAIN(n)
    assert cp.check_convex(C).convex
    assert cp.flat_ridges_before_caulking(n) == 4 * (n - 1)
    if n > 1:
        assert not cp.check_convex(cp.build_cross_chain(n, caulk=False)).convex


def test_cut600_chain():
    C = cp.build_cut600_chain(2)
    assert cp.compound_fvector(C) == fv.CUT600_CHAIN(2) == (226, 1386, 2320, 1160)
    assert cp.check_convex(C).convex
    assert cp.glued_ridge_angles(C) == {AnglePi.of(4, 5)}


def test_ring_of_ten():
    r = cp.ring_of_ten_check()
    assert r["total"] == TWO_PI and r["verdict"] == "interior-ok"
    assert r["outer_convex"]
    assert cp.ring_of_ten_check(9)["verdict"] == "interior-deficient"


def test_angle_from_cos2():
    assert cp.angle_from_cos2(0, 0) == AnglePi.of(1, 2)
    assert cp.angle_from_cos2(__import__("fractions").Fraction(1, 4), 1) == AnglePi.of(1, 3)
    # dihedral angles lie strictly between 0 and pi
    with pytest.raises(ValueError):
        cp.angle_from_cos2(1, -1)
