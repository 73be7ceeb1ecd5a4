"""Compare the compiled and pure-Python kernels on enumerated covector sets.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 1]
"""
from __future__ import annotations

import argparse
import random
import timeit

from salcom import _kernels
from salcom.corpus import random_arrangement
from salcom.geom import enumerate_covectors
from salcom.salvetti import salvetti_elements


def workloads(seed: int):
    rng = random.Random(seed)
    for dim, n in [(2, 5), (3, 6), (3, 8)]:
        arr = random_arrangement(rng, dim, n, full_space=True, name=f"d{dim}-n{n}")
        yield arr.name, enumerate_covectors(arr).com


def bench(fn, args, force_python, repeat):
    return min(timeit.repeat(lambda: fn(*args, force_python=force_python), number=1, repeat=repeat))


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    if _kernels.BACKEND != "cython":
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'instance':<10} {'|L|':>5} {'|Sal|':>6} {'kernel':<18} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, com in workloads(args.seed):
        plus, minus = com.masks()
        els = salvetti_elements(com)
        rel_args = (
            [e.X.plus for e in els], [e.X.minus for e in els],
            [e.T.plus for e in els], [e.T.minus for e in els], com.n,
        )
        cases = [
            ("fs_violation", _kernels.fs_violation, (plus, minus, com.n)),
            ("se_violation", _kernels.se_violation, (plus, minus, com.n)),
            ("leq_matrix", _kernels.leq_matrix, (plus, minus, com.n)),
            ("salvetti_relation", _kernels.salvetti_relation, rel_args),
        ]
        for label, fn, fargs in cases:
            slow = bench(fn, fargs, True, args.repeat)
            if _kernels.BACKEND == "cython":
                fast = bench(fn, fargs, False, args.repeat)
                tail = f"{fast:>11.5f} {slow / fast:>7.1f}x"
            else:
                tail = f"{'-':>11} {'-':>8}"
            print(f"{name:<10} {len(com):>5} {len(els):>6} {label:<18} {slow:>10.5f} {tail}")


if __name__ == "__main__":
    main()
