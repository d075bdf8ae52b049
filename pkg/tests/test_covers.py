from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fatlab import covers, loops
from fatlab.complex import is_regular, is_strongly_regular
from fatlab.loops import cocycle_ok


def test_cocycle_face_sums(sg1):
    c = covers.random_cocycle(sg1.complex, 128, 42)
    assert cocycle_ok(sg1.complex, c.values, 128)
    assert all(0 <= v < 128 for v in c.values.values())


def test_cover_fvector(sg1):
    c = covers.random_cocycle(sg1.complex, 128, 42)
    assert c.surjective()
    X = covers.build_cover(sg1.complex, c)
    assert X.f_vector() == (640, 1280, 640)
    assert is_regular(X)[0]


def test_trivial_cocycle(sg1):
    S = sg1.complex
    z = covers.zero_cocycle(S, 7)
    X = covers.build_cover(S, z)
    assert X.f_vector() == S.f_vector()
    ls = loops.enumerate_obstructing_loops(sg1)
    assert not covers.strongly_regular_via_loops(ls, z)


def test_non_surjective_component(sg1):
    # values in 2Z/8 generate an index-2 subgroup
    S = sg1.complex
    basis = loops.HomologyBasis(S)
    vals = loops.solve_cocycle(S, basis.tc, [2, 6], 8)
    c = covers.Cocycle(8, vals, (2, 6))
    assert not c.surjective()
    X = covers.build_cover(S, c)
    assert X.f_vector() == (20, 40, 20)


def test_fibers_have_size_n(sg1):
    c = covers.random_cocycle(sg1.complex, 16, 3)
    assert c.surjective()
    X = covers.build_cover(sg1.complex, c)
    assert len(X.by_dim[0]) == 16 * 5


def test_uniform_generator_values(sg1):
    S = sg1.complex
    basis = loops.HomologyBasis(S)
    n, trials = 16, 1000
    counts = {}
    for e in (basis.tc.generators[0], basis.tc.cotree[0]):
        hist = np.zeros(n, dtype=int)
        for i in range(trials):
            c = covers.random_cocycle(S, n, covers.trial_rng(99, i), basis)
            hist[c.values[e]] += 1
        counts[e] = hist
    for hist in counts.values():
        expected = trials / n
        chi2 = float(((hist - expected) ** 2 / expected).sum())
        assert chi2 < 37.7  # 99.9% quantile, 15 degrees of freedom


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from([2, 5, 16, 37, 128]))
def test_loop_criterion_matches_direct_g1(sg1, seed, n):
    ls = loops.enumerate_obstructing_loops(sg1)
    c = covers.random_cocycle(sg1.complex, n, seed)
    X = covers.build_cover(sg1.complex, c)
    assert covers.strongly_regular_via_loops(ls, c) == is_strongly_regular(X)[0]


def test_loop_criterion_matches_direct_g2(sg2):
    r = covers.random_cover_experiment(2, 256, 8, seed=11, direct=True, cover=sg2)
    assert r.agreement == r.direct_checked == 8


def test_oracle_equivalence_batches(sg1, sg2):
    r = covers.random_cover_experiment(1, 16, 50, seed=0, direct=True, cover=sg1)
    assert r.agreement == 50
    r = covers.random_cover_experiment(2, 32, 20, seed=0, direct=True, cover=sg2)
    assert r.agreement == 20


def test_experiment_statistics(sg1):
    r = covers.random_cover_experiment(1, 128, 200, seed=3, cover=sg1)
    assert r.loop_count == 10
    assert r.bound == Fraction(59, 64)
    assert r.fraction >= r.bound - Fraction(1, 10)
    assert r.conditioned_fraction is not None


def test_n1_fraction_zero(sg1):
    r = covers.random_cover_experiment(1, 1, 5, cover=sg1)
    assert r.fraction == 0


def test_threads_reproducible(sg1):
    a = covers.random_cover_experiment(1, 64, 30, seed=5, cover=sg1).to_json()
    b = covers.random_cover_experiment(1, 64, 30, seed=5, threads=3, cover=sg1).to_json()
    assert a == b


def test_bad_modulus(sg1):
    with pytest.raises(ValueError):
        covers.random_cocycle(sg1.complex, 0, 1)
