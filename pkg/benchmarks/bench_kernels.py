"""Compare the compiled and pure-Python strong-regularity kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from fatlab import _kernels_py, kernels
from fatlab.complex import _kernel_arrays, cube_boundary, product_with_path, tetrahedron_surface
from fatlab.covers import build_cover, random_cocycle
from fatlab.surfaces import build_sg_prime


def inputs():
    S = build_sg_prime(1).complex
    yield "cover g=1 n=128", build_cover(S, random_cocycle(S, 128, 1))
    S2 = build_sg_prime(2).complex
    yield "cover g=2 n=64", build_cover(S2, random_cocycle(S2, 64, 1))
    yield "tetrahedron x path N=200", product_with_path(tetrahedron_surface(), 200)
    yield "4-cube boundary", cube_boundary(4)


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel not built; only the Python kernel is available")
    impls = [("python", _kernels_py)]
    if kernels.BACKEND == "cython":
        impls.insert(0, ("cython", kernels._impl))
    print(f"{'input':28s} {'cells':>7s} " + " ".join(f"{n:>10s}" for n, _ in impls) + "   speedup")
    for name, X in inputs():
        arrays = _kernel_arrays(X)
        row, results = [], []
        for _, impl in impls:
            t, out = best(lambda: kernels.strong_regularity_violation(*arrays, impl=impl), args.repeat)
            row.append(t)
            results.append(tuple(out))
        if len(set(results)) != 1:
            raise SystemExit(f"{name}: kernels disagree {results}")
        speed = f"{row[-1] / row[0]:8.1f}x" if len(row) == 2 else ""
        print(f"{name:28s} {len(X):7d} " + " ".join(f"{t * 1e3:8.2f}ms" for t in row) + "  " + speed)


if __name__ == "__main__":
    main()
