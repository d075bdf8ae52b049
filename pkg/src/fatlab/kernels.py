"""Hot loops, compiled when the extension is built.

Set ``FATLAB_PURE_PYTHON=1`` to force the Python implementation.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels_py

if os.environ.get("FATLAB_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"


def strong_regularity_violation(indptr, indices, dims, sptr, sidx, vptr, vidx,
                                threads: int = 1, impl=None):
    """Scan all vertex stars; returns the first violating pair or (-1, -1).

    Arrays are int64 CSR layouts: closures (sorted), cell dimensions, vertex
    stars and per-cell vertex sets (sorted vertex positions).
    """
    impl = impl or _impl
    arrays = [np.ascontiguousarray(a, dtype=np.int64)
              for a in (indptr, indices, dims, sptr, sidx, vptr, vidx)]
    nverts = len(arrays[3]) - 1
    if threads <= 1 or nverts < 2 * threads:
        return impl.scan_range(*arrays, 0, nverts)
    bounds = np.linspace(0, nverts, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda lh: impl.scan_range(*arrays, int(lh[0]), int(lh[1])),
                                zip(bounds[:-1], bounds[1:])))
    for r in results:
        if r[0] >= 0:
            return r
    return -1, -1


def get_threads() -> int:
    return _threads


def set_threads(n: int):
    global _threads
    if n < 1:
        raise ValueError("threads must be positive")
    _threads = n


_threads = 1
