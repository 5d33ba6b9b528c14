"""Portable deterministic random numbers for witness sampling.

The generator is SplitMix64 (Steele, Lea & Flood), chosen because its
output is a pure function of a 64-bit counter: draw ``j`` of the stream
seeded with ``seed`` is ``mix64(seed + j * GOLDEN)`` with all arithmetic
mod 2**64.  That gives random access (any sample index can be generated
without replaying the stream), which keeps parallel sampling and resumed
runs byte-for-byte reproducible across platforms.

Constants:

    GOLDEN = 0x9E3779B97F4A7C15
    mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
              z ^= z >> 27; z *= 0x94D049BB133111EB;
              z ^= z >> 31

Matrix entries: sample index ``k`` of an m x n matrix consumes draws
``k*m*n + 1 .. (k+1)*m*n`` in row-major order, each mapped into
``[-bound, bound]`` as ``draw % (2*bound + 1) - bound``.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def draw(seed: int, j: int) -> int:
    """The j-th raw 64-bit output of the stream with the given seed (j >= 1)."""
    return mix64((seed + j * GOLDEN) & MASK64)


def matrix_entries(seed: int, k: int, m: int, n: int, bound: int) -> list:
    """Row-major integer entries in [-bound, bound] for sample index k."""
    span = 2 * bound + 1
    base = k * m * n
    return [draw(seed, base + t + 1) % span - bound for t in range(m * n)]
