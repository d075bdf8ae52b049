from itertools import combinations
from math import comb

import pytest

from fatlab import loops
from fatlab.complex import star
from fatlab.covers import build_cover, random_cocycle
from fatlab.surfaces import build_sg_prime


@pytest.mark.parametrize("g", [1, 2, 3])
def test_loop_counts(g):
    C = build_sg_prime(g)
    ls = loops.enumerate_obstructing_loops(C)
    L = len(ls)
    assert L == comb(4 * g + 1, 2) * comb(4 * g - 2, 2)
    assert L <= loops.loop_bound(g) and L < 64 * g ** 4
    assert len(loops.star_points(C.complex, 0)) == 4 * g * (4 * g - 2)
    per_vertex = 4 * g * comb(4 * g - 2, 2)
    assert 2 * L == C.q * per_vertex
    r = loops.verify_loop_classes(C, ls)
    assert r.ok, r.failures()


def _projection_pairs_in_embedded_star(C, n, seed):
    # in a strongly regular cover the star of a lifted vertex is a copy of the universal-cover star
    S = C.complex
    c = random_cocycle(S, n, seed)
    X = build_cover(S, c)
    assert len(X.by_dim[0]) == n * C.q
    from fatlab.complex import is_strongly_regular
    if not is_strongly_regular(X)[0]:
        return None
    proj = {i: v for i, (v, t) in enumerate(sorted((v, t) for v in S.by_dim[0] for t in range(n)))}
    total = 0
    for vhat in X.by_dim[0]:
        pts = [w for w in star(X, vhat) if X.cells[w].dim == 0 and w != vhat]
        by = {}
        for w in pts:
            by.setdefault(proj[w], []).append(w)
        total += sum(comb(len(ws), 2) for ws in by.values())
    return total // n


def test_loop_count_brute_force_g1(sg1):
    for seed in range(20):
        pairs = _projection_pairs_in_embedded_star(sg1, 128, seed)
        if pairs is not None:
            break
    assert pairs is not None
    # each loop through {v, w} is seen once from v and once from w
    assert pairs == 2 * len(loops.enumerate_obstructing_loops(sg1)) == 20


def test_loop_arcs_are_distinct_faces(sg2):
    for l in loops.enumerate_obstructing_loops(sg2):
        assert not (l.faces[0] & l.faces[1])
        assert 1 <= len(l.arcs[0]) <= 2 * sg2.g
        assert l.length < 4 * sg2.g


def test_homology_rank():
    for g in (1, 2, 3):
        C = build_sg_prime(g)
        basis = loops.HomologyBasis(C.complex)
        assert basis.rank == 2 * (1 + C.q * (g - 1))


def test_null_homologous_control(sg1):
    basis = loops.HomologyBasis(sg1.complex)
    S = sg1.complex
    for f in S.by_dim[2]:
        ch = loops.face_boundary_chain(S, f)
        assert basis.is_cycle(ch)
        assert not any(basis.coordinates(ch))


def test_indivisible():
    assert loops.indivisible((2, 3))
    assert not loops.indivisible((2, 4))
    assert not loops.indivisible((0, 0))


def test_split_bound():
    q, g = 13, 3
    assert min(k * (q - k) for k in range(1, q)) == 12 == 4 * g


def test_cocycle_basis_dual_to_generators(sg2):
    basis = loops.HomologyBasis(sg2.complex)
    for k, e in enumerate(basis.tc.generators):
        assert basis.matrix[k, basis.col[e]] == 1
        for e2 in basis.tc.tree:
            assert basis.matrix[k, basis.col[e2]] == 0
