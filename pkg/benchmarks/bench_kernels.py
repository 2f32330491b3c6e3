"""Time the compiled and pure-Python composition kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from ctree import kernels
from ctree.evaluate import _ORACLE_CACHE, tree_oracle_table
from ctree.generate import palette, random_pair

CASES = [
    ("chain n=3 M=20", (3, [(0, 1, 1), (0, 2, 2), (0, 3, 1)], [0, 1, 0], 2, 20)),
    ("star n=4 M=20", (4, [(0, 1, 1), (1, 2, 1), (2, 3, 2), (0, 4, 1)], [0, 1, 2, 0], 3, 20)),
    ("path n=5 M=18", (5, [(i, i + 1, 1) for i in range(5)], [0, 1, 0, 1, 2], 3, 18)),
]


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels._composition_residues is None:
        print("compiled extension not available; only the python backend can run")
    print(f"{'case':<24}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, prob in CASES:
        py = bench(lambda: kernels.composition_sums(*prob, backend="python"), args.repeat)
        if kernels._composition_residues is None:
            print(f"{name:<24}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        cy = bench(lambda: kernels.composition_sums(*prob, backend="cython"), args.repeat)
        assert kernels.composition_sums(*prob, backend="cython") == kernels.composition_sums(*prob, backend="python")
        print(f"{name:<24}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")

    rng = random.Random(0)
    pairs = [random_pair(rng, 7, 3, palette(3)) for _ in range(20)]
    for backend in ("python", "cython"):
        def run():
            _ORACLE_CACHE.clear()
            for p in pairs:
                tree_oracle_table(p, 20, backend=backend)

        print(f"20 random pairs, M=20, {backend:<7}{bench(run, args.repeat):>10.3f} s")


if __name__ == "__main__":
    main()
