"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--groups S4 A5 S5] [--repeat 3]

Times subgroup-lattice construction (closure and conjugation dominate) and
a closure microbenchmark under each available backend.
"""

import argparse
import random
import statistics
import time

from orbitcat import group_preset, kernels
from orbitcat.group_core import SubgroupLattice


def available():
    out = ["python"]
    try:
        from orbitcat import _ckernels  # noqa: F401
        out.append("cython")
    except ImportError:
        pass
    return out


def time_lattice(name, repeat):
    G = group_preset(name)
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        SubgroupLattice(G)
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


def time_closure(name, repeat, calls=2000):
    G = group_preset(name)
    n = G.order
    mul = kernels.int_table(x for row in G.mul for x in row)
    rng = random.Random(0)
    gens = [rng.sample(range(n), 2) for _ in range(calls)]
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for g in gens:
            kernels.closure(mul, n, g)
        samples.append(time.perf_counter() - t0)
    return min(samples)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--groups", nargs="+", default=["S4", "A5", "S5"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available()
    start = kernels.BACKEND
    rows = {}
    try:
        for b in backends:
            kernels.use(b)
            for name in args.groups:
                lat_min, _ = time_lattice(name, args.repeat)
                rows[b, name] = (lat_min, time_closure(name, args.repeat))
    finally:
        kernels.use(start)
    print(f"{'group':>6} {'backend':>8} {'lattice s':>10} {'closure s':>10}")
    for name in args.groups:
        for b in backends:
            lat_t, clo_t = rows[b, name]
            print(f"{name:>6} {b:>8} {lat_t:10.3f} {clo_t:10.3f}")
        if "cython" in backends:
            ratio = rows["python", name][0] / rows["cython", name][0]
            print(f"{name:>6} {'speedup':>8} {ratio:10.1f}x")


if __name__ == "__main__":
    main()
