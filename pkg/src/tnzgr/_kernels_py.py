"""Pure-Python kernels for packed sign-vector bulk work.

Same interface as the compiled extension (see _kernels.pyx); selected at
import time by tnzgr.kernels when the extension is unavailable or when
the packed width exceeds 64 bits.  Packed convention: bit r set means the
sign at subset rank r is -1; canonical form has bit 0 clear.
"""

from .prng import GOLDEN, MASK64


def packed_strata_2d(n, pair_rank, canonical):
    """All packed upper-triangle sign patterns over the coset representatives.

    Walks representatives (1, a_2, ..., a_n) as an outer loop over
    permutations of 2..n and an inner Gray-code walk over the 2^(n-1) sign
    patterns; a sign flip at one position toggles a fixed XOR mask, so each
    representative costs O(1) beyond its predecessor.  With canonical=True
    patterns are folded modulo global negation (strata); otherwise they are
    kept as-is (orientation sign matrices).
    """
    from itertools import permutations

    nbits = n * (n - 1) // 2
    full = (1 << nbits) - 1
    masks = []
    for pos in range(1, n):
        mask = 0
        for other in range(n):
            if other != pos:
                i, j = (other, pos) if other < pos else (pos, other)
                mask |= 1 << pair_rank[i * n + j]
        masks.append(mask)
    out = set()
    add = out.add
    half = 1 << (n - 1)
    for perm in permutations(range(2, n + 1)):
        q = (1,) + perm
        base = 0
        for i in range(n - 1):
            qi = q[i]
            for j in range(i + 1, n):
                if qi > q[j]:
                    base |= 1 << pair_rank[i * n + j]
        x = base
        add(x ^ full if canonical and x & 1 else x)
        for g in range(1, half):
            x ^= masks[(g & -g).bit_length() - 1]
            add(x ^ full if canonical and x & 1 else x)
    return out


def make_tables(gen_maps, nbits):
    """Byte-sliced lookup tables for the packed generator actions.

    Each generator map is (srcs, flips): bit r of the image reads bit
    srcs[r] of the argument, XOR flips.  Applying a generator then costs one
    table lookup per source byte; the flip mask is folded into byte 0.
    """
    nbytes = (nbits + 7) >> 3
    tables = []
    for srcs, flips in gen_maps:
        contrib = [[0] * 8 for _ in range(nbytes)]
        for r, src in enumerate(srcs):
            contrib[src >> 3][src & 7] |= 1 << r
        per_gen = []
        for b in range(nbytes):
            row = [0] * 256
            cb = contrib[b]
            for v in range(1, 256):
                low = v & -v
                row[v] = row[v ^ low] | cb[low.bit_length() - 1]
            per_gen.append(row)
        for v in range(256):
            per_gen[0][v] ^= flips
        tables.append(per_gen)
    return nbits, nbytes, tables


def orbit_closure(seed, tables, fold=True):
    """Breadth-first closure of one packed vector under the generators.

    With fold=True images are reduced modulo global negation (the action on
    strata); with fold=False they are kept as raw sign vectors.
    """
    nbits, nbytes, gens = tables
    full = (1 << nbits) - 1
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for per_gen in gens:
                y = 0
                for b in range(nbytes):
                    y ^= per_gen[b][(x >> (b << 3)) & 255]
                if fold and y & 1:
                    y ^= full
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def scan_samples(seed, k0, k1, m, n, bound, subsets):
    """Scan sample indices [k0, k1): canonical packed signs of each accepted draw.

    Returns (accepted_count, {packed: first accepting index}).  Entries come
    from the documented SplitMix64 stream, so the result depends only on the
    arguments.  A sample with any zero minor is rejected.
    """
    count = len(subsets) // m
    full = (1 << count) - 1
    span = 2 * bound + 1
    cells = m * n
    found = {}
    accepted = 0
    for k in range(k0, k1):
        base = k * cells
        e = []
        for t in range(cells):
            z = (seed + (base + t + 1) * GOLDEN) & MASK64
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
            e.append((z ^ (z >> 31)) % span - bound)
        bits = 0
        ok = True
        if m == 2:
            for r in range(count):
                c1 = subsets[2 * r]
                c2 = subsets[2 * r + 1]
                d = e[c1] * e[n + c2] - e[c2] * e[n + c1]
                if d == 0:
                    ok = False
                    break
                if d < 0:
                    bits |= 1 << r
        elif m == 3:
            for r in range(count):
                c1 = subsets[3 * r]
                c2 = subsets[3 * r + 1]
                c3 = subsets[3 * r + 2]
                d = (
                    e[c1] * (e[n + c2] * e[2 * n + c3] - e[n + c3] * e[2 * n + c2])
                    - e[c2] * (e[n + c1] * e[2 * n + c3] - e[n + c3] * e[2 * n + c1])
                    + e[c3] * (e[n + c1] * e[2 * n + c2] - e[n + c2] * e[2 * n + c1])
                )
                if d == 0:
                    ok = False
                    break
                if d < 0:
                    bits |= 1 << r
        else:
            for r in range(count):
                cols = subsets[m * r : m * (r + 1)]
                d = _int_det([[e[row * n + c] for c in cols] for row in range(m)])
                if d == 0:
                    ok = False
                    break
                if d < 0:
                    bits |= 1 << r
        if not ok:
            continue
        accepted += 1
        if bits & 1:
            bits ^= full
        if bits not in found:
            found[bits] = k
    return accepted, found


def _int_det(grid):
    # fraction-free Bareiss over plain ints
    k = len(grid)
    sign = 1
    prev = 1
    for col in range(k - 1):
        if grid[col][col] == 0:
            for r in range(col + 1, k):
                if grid[r][col] != 0:
                    grid[col], grid[r] = grid[r], grid[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = grid[col][col]
        for i in range(col + 1, k):
            row_i = grid[i]
            head = row_i[col]
            row_c = grid[col]
            for j in range(col + 1, k):
                row_i[j] = (row_i[j] * pivot - head * row_c[j]) // prev
        prev = pivot
    return sign * grid[k - 1][k - 1]
