"""Time the compiled and pure-Python RK4 kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--trials 200]
"""
import argparse
import time

import numpy as np

from loewner_regions import _backend, chordal, radial
from loewner_regions.drivers import random_circle_driver, random_real_driver


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads(trials):
    circle = [random_circle_driver(np.random.default_rng([0, i]), 3.0) for i in range(trials)]
    real = [random_real_driver(np.random.default_rng([0, i]), 3.0, 0.0, 1.0) for i in range(trials)]
    optimal = radial.optimal_driver(0.5 + 0.4j, "plus")

    def radial_random(backend):
        for d in circle:
            radial.integrate(0.5 + 0.4j, d, 3.0, 1e-3, backend=backend)

    def radial_optimal(backend):
        radial.integrate(0.5 + 0.4j, optimal, 5.0, 1e-3, backend=backend)

    def chordal_random(backend):
        for d in real:
            chordal.integrate_chordal(1j, d, 3.0, 1e-3, backend=backend)

    return {
        f"radial, {trials} random drivers": radial_random,
        "radial, optimal driver, T=5": radial_optimal,
        f"chordal, {trials} random drivers": chordal_random,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--trials", type=int, default=200)
    args = ap.parse_args()
    try:
        _backend.kernels("cython")
        backends = ["cython", "python"]
    except ImportError:
        print("compiled kernels not built; timing the Python kernels only")
        backends = ["python"]

    print(f"{'workload':36s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in workloads(args.trials).items():
        t = [best_of(lambda: fn(b), args.repeat) for b in backends]
        row = f"{name:36s}" + "".join(f"{x:11.3f}s" for x in t)
        if len(t) == 2:
            row += f"{t[1] / t[0]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
