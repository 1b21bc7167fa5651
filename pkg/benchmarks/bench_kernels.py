"""Time the batch kernels on random squeezed thermal states.

    python3 benchmarks/bench_kernels.py --states 100000 --repeat 5
"""
import argparse
import time

import numpy as np

from dircorr import kernels
from dircorr.gaussian_core import sts_entries


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--states", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    r = rng.uniform(0.0, 2.0, args.states)
    nA = rng.uniform(0.0, 3.0, args.states)
    nB = rng.uniform(0.0, 3.0, args.states)
    n, m, c = sts_entries(r, nA, nB)

    results = {}
    for name in kernels.available_backends():
        results[name] = best_time(lambda: kernels.evaluate_matrix(n, m, c, backend=name), args.repeat)

    print(f"{args.states} states, best of {args.repeat}")
    for name, seconds in results.items():
        rate = args.states / seconds
        print(f"  {name:<7} {seconds * 1e3:8.2f} ms  {rate:12.0f} states/s")
    if "cython" in results:
        print(f"  speed-up {results['python'] / results['cython']:.1f}x")
        a = kernels.evaluate_matrix(n, m, c, backend="python")
        b = kernels.evaluate_matrix(n, m, c, backend="cython")
        diff = np.nanmax(np.abs(a - b) / np.maximum(1.0, np.abs(a)))
        print(f"  max relative difference {diff:.1e}")
    else:
        print("  compiled kernel not built; only the NumPy backend is available")


if __name__ == "__main__":
    main()
