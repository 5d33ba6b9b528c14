#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths on both backends and prints a speedup table:

  * stratum enumeration (Gray-code walk over coset representatives)
  * orbit closure under the signed relabeling generators
  * integer witness sampling (SplitMix64 + minor signs)

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import sys
import time
from math import comb

from tnzgr import _kernels_py, kernels
from tnzgr.counting import partition_generators
from tnzgr.pluecker import get_indexer
from tnzgr.signedperm import sign_action_map


def _time(func, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = func()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_enumeration(impl, n):
    flat = kernels._pair_rank_flat(n)
    return _time(lambda: len(impl.packed_strata_2d(n, flat, True)))


def bench_orbit(impl, n):
    gen_maps = [sign_action_map(get_indexer(n, 2), p) for p in partition_generators("hyperoctahedral", n)]
    nbits = comb(n, 2)
    tables = impl.make_tables(gen_maps, nbits)
    return _time(lambda: len(impl.orbit_closure(0, tables)), repeat=1)


def bench_scan(impl, samples):
    m, n = 3, 6
    indexer = get_indexer(n, m)
    flat = [c - 1 for subset in indexer.subsets for c in subset]
    return _time(lambda: impl.scan_samples(12345, 0, samples, m, n, 50, flat)[0], repeat=1)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller problem sizes")
    args = parser.parse_args(argv)

    if not kernels.has_extension():
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1
    from tnzgr import _kernels as ext

    enum_n = 7 if args.quick else 8
    orbit_n = 7 if args.quick else 8
    samples = 10**4 if args.quick else 10**5

    cases = [
        (f"enumerate strata, n={enum_n}", bench_enumeration, (enum_n,)),
        (f"hyperoctahedral orbit closure, n={orbit_n}", bench_orbit, (orbit_n,)),
        (f"sample scan m=3 n=6, {samples} draws", bench_scan, (samples,)),
    ]

    print(f"{'case':<45} {'cython':>10} {'python':>10} {'speedup':>8}")
    for label, bench, extra in cases:
        t_ext, r_ext = bench(ext, *extra)
        t_py, r_py = bench(_kernels_py, *extra)
        if r_ext != r_py:
            print(f"{label:<45} BACKEND MISMATCH: {r_ext} vs {r_py}", file=sys.stderr)
            return 1
        print(f"{label:<45} {t_ext:>9.3f}s {t_py:>9.3f}s {t_py / t_ext:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
