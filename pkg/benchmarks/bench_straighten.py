#!/usr/bin/env python3
"""Benchmark the straightening kernels: compiled extension vs pure Python.

Times three representative workloads on B2: raw monomial products, the
Shapovalov polynomial matrices up to depth 5, and a regular-block
decomposition.  Each workload runs on a fresh kernel/algebra so cache
state never leaks between the two implementations.
"""

import random
import time

from bggkit import _straighten_py
from bggkit.liealg import LieAlgebraData
from bggkit.rootdata import Weight, build_root_system
from bggkit import category

try:
    from bggkit import _straighten_cy
except ImportError:
    _straighten_cy = None


def fresh_algebra(kernel_module):
    """B2 algebra whose kernel comes from the given module."""
    alg = LieAlgebraData(build_root_system("B2"))
    alg.kernel = kernel_module.StraightenKernel(alg.d, alg._table)
    return alg


def workload_products(kernel_module):
    alg = fresh_algebra(kernel_module)
    kernel = alg.kernel
    rng = random.Random(1)
    monos = []
    for _ in range(400):
        a = [0] * alg.d
        b = [0] * alg.d
        for _ in range(rng.randint(1, 6)):
            a[rng.randrange(alg.d)] += 1
        for _ in range(rng.randint(1, 6)):
            b[rng.randrange(alg.d)] += 1
        monos.append((tuple(a), tuple(b)))
    start = time.perf_counter()
    sink = 0
    for a, b in monos:
        sink += len(kernel.multiply_monomials(a, b))
    return time.perf_counter() - start, sink


def workload_shapovalov(kernel_module):
    alg = fresh_algebra(kernel_module)
    start = time.perf_counter()
    sink = 0
    for nu in category.gamma_elements(alg, 5):
        _, polys = category.shapovalov_polynomial_matrix(alg, nu)
        sink += len(polys)
    return time.perf_counter() - start, sink


def workload_block(kernel_module):
    alg = fresh_algebra(kernel_module)
    start = time.perf_counter()
    dec = category.decomposition_matrix(alg, Weight([0, 0]))
    return time.perf_counter() - start, dec.size


def main():
    workloads = [
        ("400 monomial products (deg <= 12)", workload_products),
        ("Shapovalov polynomials to depth 5", workload_shapovalov),
        ("B2 regular block decomposition", workload_block),
    ]
    impls = [("python", _straighten_py)]
    if _straighten_cy is not None:
        impls.append(("cython", _straighten_cy))
    else:
        print("compiled kernel not built; benchmarking pure Python only")

    print(f"{'workload':40s} " + " ".join(f"{name:>10s}" for name, _ in impls)
          + ("    speedup" if len(impls) == 2 else ""))
    for title, fn in workloads:
        times = []
        checks = []
        for _, module in impls:
            elapsed, sink = fn(module)
            times.append(elapsed)
            checks.append(sink)
        assert len(set(checks)) == 1, "kernel implementations disagree"
        row = f"{title:40s} " + " ".join(f"{t:9.3f}s" for t in times)
        if len(times) == 2:
            row += f"    {times[0] / times[1]:6.2f}x"
        print(row)


if __name__ == "__main__":
    main()
