"""Benchmark the compiled kernels against the numpy fallback.

Times the three kernel functions on assembly-sized inputs and a full
polygon assembly end to end. Run from the repository root:

    python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from dbslab.geometry import regular_polygon
from dbslab.kernels import available_backends, get_backend
from dbslab.solver import assemble, default_quadrature
from dbslab.basis import make_mfs_basis, make_poly_basis


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_kernels(repeats):
    rng = np.random.default_rng(42)
    cases = []

    for npts, degree in [(2_000, 12), (40_000, 16)]:
        pts = rng.uniform(-1.0, 1.0, size=(npts, 2))
        cases.append(
            (f"poly_values  n={npts:<6} p={degree}",
             lambda b, pts=pts, degree=degree: b.poly_values(pts, 0.1, -0.2, 1.3, degree))
        )

    pts = rng.uniform(-1.0, 1.0, size=(10_000, 2))
    src = 2.0 * np.column_stack(
        [np.cos(np.linspace(0, 2 * np.pi, 100, endpoint=False)),
         np.sin(np.linspace(0, 2 * np.pi, 100, endpoint=False))]
    )
    cases.append(("mfs_values   n=10000 m=100",
                  lambda b: b.mfs_values(pts, src)))

    for npts, dim in [(5_000, 25), (40_000, 33), (10_000, 101)]:
        values = rng.standard_normal((npts, dim))
        weights = rng.uniform(0.5, 1.5, size=npts)
        cases.append(
            (f"weighted_gram n={npts:<6} d={dim}",
             lambda b, v=values, w=weights: b.weighted_gram(v, w))
        )

    polygon = regular_polygon(64, 1.0, "inscribed")
    poly_basis = make_poly_basis(polygon, 16)
    mfs_basis = make_mfs_basis(polygon, 100)
    cases.append(("assemble polygon k=64 p=16",
                  lambda b: assemble(polygon, poly_basis, backend=b)))
    cases.append(("assemble polygon k=64 mfs=100",
                  lambda b: assemble(polygon, mfs_basis, backend=b)))

    names = [n for n in ("numpy", "cython") if n in available_backends()]
    backends = [get_backend(name) for name in names]
    header = f"{'case':<32}" + "".join(f"{b.name + ' [ms]':>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in cases:
        times = [best_of(lambda b=b: fn(b), repeats) for b in backends]
        row = f"{label:<32}" + "".join(f"{t * 1e3:>14.3f}" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>10.2f}x"
        print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats per case")
    args = parser.parse_args()
    names = available_backends()
    print(f"available backends: {', '.join(names)}")
    if len(names) == 1:
        print("compiled extension not built; timing the numpy fallback only")
    bench_kernels(args.repeats)


if __name__ == "__main__":
    main()
