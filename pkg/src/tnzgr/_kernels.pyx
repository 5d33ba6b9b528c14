# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for packed sign-vector bulk work.

Mirrors tnzgr._kernels_py exactly (same functions, same results); the
dispatch layer in tnzgr.kernels picks this module when it compiled and the
packed width fits in 64 bits.  Packed convention: bit r set means the sign
at subset rank r is -1; canonical form has bit 0 clear.
"""

from itertools import permutations

from cpython.array cimport array
from array import array as _array

ctypedef unsigned long long u64
ctypedef long long i64

cdef u64 GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline u64 _mix64(u64 z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def packed_strata_2d(int n, pair_rank, bint canonical):
    """All packed upper-triangle sign patterns over the coset representatives.

    Same Gray-code walk as the pure-Python twin: permutations of 2..n
    outside, one XOR per sign flip inside.
    """
    cdef int nbits = n * (n - 1) // 2
    cdef u64 full = (<u64>1 << nbits) - 1
    cdef array pr = _array("i", pair_rank)
    cdef int[:] prv = pr
    cdef u64[64] masks
    cdef int pos, other, i, j, t
    cdef u64 x, y, base
    cdef unsigned int g, half
    for pos in range(1, n):
        x = 0
        for other in range(n):
            if other != pos:
                if other < pos:
                    x |= <u64>1 << prv[other * n + pos]
                else:
                    x |= <u64>1 << prv[pos * n + other]
        masks[pos - 1] = x
    out = set()
    half = <unsigned int>1 << (n - 1)
    cdef array qa = _array("i", [0] * n)
    cdef int[:] q = qa
    q[0] = 1
    for perm in permutations(range(2, n + 1)):
        for i in range(n - 1):
            q[i + 1] = perm[i]
        base = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                if q[i] > q[j]:
                    base |= <u64>1 << prv[i * n + j]
        x = base
        y = x ^ full if canonical and (x & 1) else x
        out.add(y)
        for g in range(1, half):
            t = 0
            while not (g >> t) & 1:
                t += 1
            x ^= masks[t]
            y = x ^ full if canonical and (x & 1) else x
            out.add(y)
    return out


def make_tables(gen_maps, int nbits):
    """Byte-sliced lookup tables; layout (nbits, nbytes, flat array of u64)."""
    cdef int nbytes = (nbits + 7) >> 3
    cdef int ngens = len(gen_maps)
    flat = _array("Q", bytes(8 * ngens * nbytes * 256))
    cdef u64[:] tv = flat
    cdef int g, b, r, src, off
    cdef unsigned int v, low
    cdef long base
    cdef u64 flips
    cdef u64[512] contrib  # nbytes*8 slots, nbytes <= 8 when nbits <= 64
    for g in range(ngens):
        srcs, flip_mask = gen_maps[g]
        flips = flip_mask
        for b in range(nbytes * 8):
            contrib[b] = 0
        for r in range(len(srcs)):
            src = srcs[r]
            contrib[src] |= <u64>1 << r
        for b in range(nbytes):
            base = (g * nbytes + b) * 256
            for v in range(1, 256):
                low = v & (-v)
                off = 0
                while not (low >> off) & 1:
                    off += 1
                tv[base + v] = tv[base + (v ^ low)] | contrib[b * 8 + off]
        base = g * nbytes * 256
        for v in range(256):
            tv[base + v] ^= flips
    return nbits, nbytes, flat


def orbit_closure(seed, tables, bint fold=True):
    """Breadth-first closure of one packed vector under the generators.

    With fold=True images are reduced modulo global negation (the action on
    strata); with fold=False they are kept as raw sign vectors.
    """
    cdef int nbits = tables[0]
    cdef int nbytes = tables[1]
    cdef u64[:] tv = tables[2]
    cdef int ngens = tv.shape[0] // (nbytes * 256)
    cdef u64 full = (<u64>1 << nbits) - 1
    cdef u64 x, y
    cdef int g, b
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for xobj in frontier:
            x = <u64>xobj
            for g in range(ngens):
                y = 0
                for b in range(nbytes):
                    y ^= tv[(g * nbytes + b) * 256 + ((x >> (b << 3)) & 255)]
                if fold and y & 1:
                    y ^= full
                yobj = y
                if yobj not in seen:
                    seen.add(yobj)
                    nxt.append(yobj)
        frontier = nxt
    return seen


def scan_samples(seed, k0, k1, int m, int n, bound, subsets):
    """Scan sample indices [k0, k1): canonical packed signs of each accepted draw.

    64-bit arithmetic throughout; the dispatch layer guarantees the entry
    bound keeps every minor inside int64.
    """
    cdef int count = len(subsets) // m
    cdef u64 full = (<u64>1 << count) - 1
    cdef i64 bnd = bound
    cdef i64 span = 2 * bnd + 1
    cdef int cells = m * n
    cdef u64 sd = <u64>(<object>seed & 0xFFFFFFFFFFFFFFFF)
    cdef i64 kk, kstart = k0, kend = k1
    cdef array sub = _array("i", subsets)
    cdef int[:] sv = sub
    cdef i64[64] e
    cdef int t, r, c1, c2, c3
    cdef i64 d
    cdef u64 bits, base
    cdef bint ok
    cdef i64 accepted = 0
    if cells > 64 or count > 64 or m not in (2, 3):
        raise ValueError("compiled scan kernel limits exceeded")
    found = {}
    for kk in range(kstart, kend):
        base = <u64>kk * <u64>cells
        for t in range(cells):
            d = <i64>(_mix64(sd + (base + t + 1) * GOLDEN) % <u64>span)
            e[t] = d - bnd
        bits = 0
        ok = True
        if m == 2:
            for r in range(count):
                c1 = sv[2 * r]
                c2 = sv[2 * r + 1]
                d = e[c1] * e[n + c2] - e[c2] * e[n + c1]
                if d == 0:
                    ok = False
                    break
                if d < 0:
                    bits |= <u64>1 << r
        else:
            for r in range(count):
                c1 = sv[3 * r]
                c2 = sv[3 * r + 1]
                c3 = sv[3 * r + 2]
                d = (
                    e[c1] * (e[n + c2] * e[2 * n + c3] - e[n + c3] * e[2 * n + c2])
                    - e[c2] * (e[n + c1] * e[2 * n + c3] - e[n + c3] * e[2 * n + c1])
                    + e[c3] * (e[n + c1] * e[2 * n + c2] - e[n + c2] * e[2 * n + c1])
                )
                if d == 0:
                    ok = False
                    break
                if d < 0:
                    bits |= <u64>1 << r
        if not ok:
            continue
        accepted += 1
        if bits & 1:
            bits ^= full
        key = bits
        if key not in found:
            found[key] = kk
    return accepted, found
