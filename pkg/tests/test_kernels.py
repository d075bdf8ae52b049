import pytest
from hypothesis import given, settings, strategies as st

from fatlab import _kernels_py, kernels
from fatlab.complex import _kernel_arrays, cube_boundary, is_strongly_regular
from fatlab.covers import build_cover, random_cocycle


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3, 8, 16, 40]))
def test_backends_agree(sg1, seed, n):
    X = build_cover(sg1.complex, random_cocycle(sg1.complex, n, seed))
    arrays = _kernel_arrays(X)
    ref = kernels.strong_regularity_violation(*arrays, impl=_kernels_py)
    got = kernels.strong_regularity_violation(*arrays)
    assert (ref[0] < 0) == (got[0] < 0)


@pytest.mark.parametrize("threads", [1, 2, 4])
def test_threads_do_not_change_verdict(sg1, threads):
    X = build_cover(sg1.complex, random_cocycle(sg1.complex, 64, 5))
    arrays = _kernel_arrays(X)
    base = kernels.strong_regularity_violation(*arrays)
    assert (kernels.strong_regularity_violation(*arrays, threads=threads)[0] < 0) == (base[0] < 0)


def test_set_threads():
    kernels.set_threads(2)
    try:
        assert is_strongly_regular(cube_boundary(4))[0]
    finally:
        kernels.set_threads(1)
    with pytest.raises(ValueError):
        kernels.set_threads(0)
