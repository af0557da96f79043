#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each enumeration kernel on a representative workload with both
backends and prints the timings and speedup.  Counts are asserted equal,
so this doubles as a coarse equivalence check at scales the unit tests
do not visit.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from symtotient import _kernels

WORKLOADS = [
    (
        "count_sym_zeros  p=13 k=6 J={2}      (4.8M tuples)",
        lambda fn: fn(13, 6, np.array([2], dtype=np.int64)),
        "_nb_count_sym_zeros",
        "_np_count_sym_zeros",
    ),
    (
        "count_sym_zeros  p=23 k=5 J={1,2}    (6.4M tuples)",
        lambda fn: fn(23, 5, np.array([1, 2], dtype=np.int64)),
        "_nb_count_sym_zeros",
        "_np_count_sym_zeros",
    ),
    (
        "count_sym_units  n=251 k=2 J={1,2} joint (63K tuples)",
        lambda fn: fn(251, 2, np.array([1, 2], dtype=np.int64), True),
        "_nb_count_sym_units",
        "_np_count_sym_units",
    ),
    (
        "count_sym_units  n=45 k=3 J={1,2,3} indiv (91K tuples)",
        lambda fn: fn(45, 3, np.array([1, 2, 3], dtype=np.int64), False),
        "_nb_count_sym_units",
        "_np_count_sym_units",
    ),
    (
        "lincong_histogram n=40 k=4 coeffs=1  (2.6M tuples)",
        lambda fn: fn(40, 4, np.ones(4, dtype=np.int64), np.array([2, 3], dtype=np.int64)),
        "_nb_lincong_histogram",
        "_np_lincong_histogram",
    ),
    (
        "quadform_histogram p=31 k=4          (0.9M tuples)",
        lambda fn: fn(31, 4, np.arange(16, dtype=np.int64).reshape(4, 4) % 31
                     + np.arange(16, dtype=np.int64).reshape(4, 4).T % 31),
        "_nb_quadform_histogram",
        "_np_quadform_histogram",
    ),
]


def best_of(repeat, call, fn):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = call(fn)
        best = min(best, time.perf_counter() - t0)
    return best, result


def as_scalar(value):
    arr = np.asarray(value)
    return int(arr.sum())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; only the numpy backend can run")
        return

    print(f"{'workload':<58} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for label, call, nb_name, np_name in WORKLOADS:
        nb_fn = getattr(_kernels, nb_name)
        np_fn = getattr(_kernels, np_name)
        call(nb_fn)  # JIT warm-up outside the timing
        nb_time, nb_val = best_of(args.repeat, call, nb_fn)
        np_time, np_val = best_of(args.repeat, call, np_fn)
        assert as_scalar(nb_val) == as_scalar(np_val), label
        print(f"{label:<58} {nb_time:8.3f}s {np_time:8.3f}s {np_time / nb_time:7.1f}x")


if __name__ == "__main__":
    main()
