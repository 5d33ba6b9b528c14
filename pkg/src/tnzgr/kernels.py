"""Backend selection for the packed kernels.

The hot loops (stratum enumeration, orbit closures, witness sampling)
exist twice: a Cython extension (tnzgr._kernels) and a pure-Python twin
(tnzgr._kernels_py) with identical semantics.  The extension is preferred
when it imported cleanly and the packed vectors fit in 64 bits; setting
TNZGR_PURE_PYTHON=1 forces the fallback.  benchmarks/bench_kernels.py
compares the two.
"""

import os
from math import comb

from . import _kernels_py
from .pluecker import get_indexer

if os.environ.get("TNZGR_PURE_PYTHON"):
    _ext = None
else:
    try:
        from . import _kernels as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"

# int64 overflow guards for the compiled scan kernel: |minor| <= m! * bound^m
_SCAN_BOUND_LIMIT = {2: 1 << 30, 3: 900_000}


def has_extension():
    return _ext is not None


def _pick(nbits):
    if _ext is not None and nbits <= 63:
        return _ext
    return _kernels_py


def _pair_rank_flat(n):
    indexer = get_indexer(n, 2)
    flat = [0] * (n * n)
    for r, (i, j) in enumerate(indexer.subsets):
        flat[(i - 1) * n + (j - 1)] = r
    return flat


def packed_strata_2d(n, canonical=True):
    """Packed canonical strata (or raw orientation patterns) for m = 2."""
    nbits = n * (n - 1) // 2
    impl = _pick(nbits)
    return impl.packed_strata_2d(n, _pair_rank_flat(n), canonical)


def make_tables(gen_maps, nbits):
    return _pick(nbits).make_tables(gen_maps, nbits), nbits


def orbit_closure(seed, tables, fold=True):
    inner, nbits = tables
    return _pick(nbits).orbit_closure(seed, inner, fold)


def orbit_labels(packed_list, gen_maps, nbits, fold=True):
    """Orbit id per input vector, grouping inputs that share a generator orbit.

    Each unlabeled input is expanded to its full closure (which may leave
    the input set; orbits of the ambient action still partition it), then
    every input found inside gets the same label.  fold=True works modulo
    global negation (strata); fold=False on raw sign vectors.
    """
    tables = make_tables(gen_maps, nbits)
    index = {}
    for i, p in enumerate(packed_list):
        index.setdefault(p, []).append(i)
    labels = [-1] * len(packed_list)
    next_label = 0
    for i, p in enumerate(packed_list):
        if labels[i] >= 0:
            continue
        for q in orbit_closure(p, tables, fold):
            for j in index.get(q, ()):
                labels[j] = next_label
        next_label += 1
    return labels


def scan_samples(seed, k0, k1, m, n, bound, subsets_flat=None):
    """Dispatching wrapper over the sampling scan; falls back for big shapes."""
    if subsets_flat is None:
        indexer = get_indexer(n, m)
        subsets_flat = [c - 1 for subset in indexer.subsets for c in subset]
    nbits = comb(n, m)
    impl = _kernels_py
    if _ext is not None and nbits <= 63 and m in _SCAN_BOUND_LIMIT and bound <= _SCAN_BOUND_LIMIT[m] and m * n <= 64:
        impl = _ext
    return impl.scan_samples(seed, k0, k1, m, n, bound, subsets_flat)
