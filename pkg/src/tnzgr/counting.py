"""Closed-form counts, their brute-force twins, and orbit partitions.

The number of strata for m = 2 is 2^(n-2) (n-1)!.  Relabeling classes are
counted three independent ways: a totient closed form, a Burnside sum
over a cyclic twist action on sign patterns, and direct breadth-first
orbit closure.  The first two count classes of raw sign vectors and agree
for all n; the BFS on strata (negation folded) agrees up to n = 5 and
drops below from n = 6 on, where chiral strata merge with their mirror
class (see count_generic_orbits_closed_form for the exact numbers).
"""

from dataclasses import dataclass
from math import comb, factorial, gcd

from . import kernels
from .pluecker import get_indexer
from .signedperm import SignedPerm, sign_action_map

GROUP_ALIASES = {
    "sn": "sn",
    "s_n": "sn",
    "symmetric": "sn",
    "hyper": "hyperoctahedral",
    "hyperoctahedral": "hyperoctahedral",
}


def totient(k):
    """Euler's totient by trial-division factorization."""
    if k < 1:
        raise ValueError("totient needs k >= 1")
    result = k
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if k > 1:
        result -= result // k
    return result


def zeta_apply(i, d):
    """Apply the cyclic twist (d_1, ..., d_n) -> (-d_n, d_1, ..., d_{n-1}) i times."""
    if i < 0:
        raise ValueError("need i >= 0")
    d = tuple(d)
    if set(d) - {1, -1}:
        raise ValueError("state entries must be +1 or -1")
    for _ in range(i):
        d = (-d[-1],) + d[:-1]
    return d


def fixed_point_count(n, i):
    """Number of sign patterns fixed by the i-th power of the twist.

    Writing n = 2^l * m with m odd: 2^n for i = 0; 2^gcd(i, n) when i is a
    nonzero multiple of 2^(l+1); 0 otherwise.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0 <= i <= 2 * n - 1:
        raise ValueError(f"need 0 <= i < 2n, got i={i}")
    if i == 0:
        return 1 << n
    l = (n & -n).bit_length() - 1
    if i % (1 << (l + 1)) == 0:
        return 1 << gcd(i, n)
    return 0


def _zeta_step_packed(x, n):
    # bit k set means entry k+1 is -1; the wrapped entry also negates
    return ((x << 1) & ((1 << n) - 1)) | (1 ^ ((x >> (n - 1)) & 1))


def fixed_point_count_bruteforce(n, i, allow_large=False):
    """Exhaustive scan of all 2^n sign patterns; guards the exponential cost."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 20 and not allow_large:
        raise ValueError(f"scan over 2^{n} states; pass allow_large=True to proceed")
    if not 0 <= i <= 2 * n - 1:
        raise ValueError(f"need 0 <= i < 2n, got i={i}")
    count = 0
    for x in range(1 << n):
        y = x
        for _ in range(i):
            y = _zeta_step_packed(y, n)
        if y == x:
            count += 1
    return count


def count_strata_2d(n):
    """Closed form 2^(n-2) (n-1)! for the number of strata at m = 2."""
    if n < 2:
        raise ValueError("need n >= 2")
    return (1 << (n - 2)) * factorial(n - 1)


def count_generic_orbits_closed_form(n):
    """Totient closed form (1/2n) sum over odd k | n of phi(k) 2^(n/k).

    This is the number of relabeling orbits of realizable *sign vectors*
    at m = 2, equivalently of orientation sign matrices under permutation
    conjugation.  For n <= 5 it coincides with the number of orbits on
    strata (sign vectors modulo global negation); from n = 6 on, chiral
    strata exist whose global negation is not a relabeling of them, and
    the stratum-orbit count reported by orbit_partition is strictly
    smaller (5, 9, 12 for n = 6, 7, 8 against 6, 10, 16 here).  See
    count_sign_vector_orbits for the brute-force twin of this formula.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = sum(totient(k) * (1 << (n // k)) for k in range(1, n + 1, 2) if n % k == 0)
    if total % (2 * n):
        raise RuntimeError(f"totient sum {total} not divisible by 2n = {2*n}")
    return total // (2 * n)


def count_generic_orbits_burnside(n):
    """Same count as the totient form, via Burnside over the twist fixed points."""
    if n < 2:
        raise ValueError("need n >= 2")
    total = sum(fixed_point_count(n, i) for i in range(2 * n))
    if total % (2 * n):
        raise RuntimeError(f"Burnside sum {total} not divisible by 2n = {2*n}; fixed-point counts are inconsistent")
    return total // (2 * n)


def count_sign_vector_orbits(n, allow_large=False):
    """Relabeling orbits of raw sign vectors at m = 2, by direct BFS.

    No global-negation folding: this is the quantity the totient closed
    form counts, and the two agree for every n (verified n = 2..8).
    """
    from . import plane

    universe = sorted(plane.enumerate_orientation_patterns(n, allow_large))
    gen_maps = [sign_action_map(get_indexer(n, 2), p) for p in partition_generators("sn", n)]
    labels = kernels.orbit_labels(universe, gen_maps, comb(n, 2), fold=False)
    return len(set(labels))


@dataclass(frozen=True)
class OrbitReport:
    group: str
    n: int
    m: int
    orbit_count: int
    orbit_sizes: tuple
    representatives: tuple

    def group_order(self):
        return factorial(self.n) if self.group == "sn" else (1 << self.n) * factorial(self.n)


def partition_generators(group, n):
    """BFS generators: adjacent transpositions, plus one reflection per coordinate."""
    gens = []
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(SignedPerm(tuple(img)))
    if group == "hyperoctahedral":
        for i in range(n):
            entries = list(range(1, n + 1))
            entries[i] = -entries[i]
            gens.append(SignedPerm(tuple(entries)))
    return gens


def orbit_partition(strata, group, n=None):
    """Partition strata into orbits of the chosen relabeling action.

    Orbits are closed by BFS over generator actions on canonical sign
    vectors; closures may pass through strata outside the input, which is
    fine because orbits of the ambient action partition any subset.
    """
    try:
        group = GROUP_ALIASES[group.lower()]
    except KeyError:
        raise ValueError(f"unknown group tag {group!r}; use 'sn' or 'hyperoctahedral'") from None
    items = sorted(strata, key=lambda t: t.bits)
    if not items:
        return OrbitReport(group, n or 0, 0, 0, (), ())
    m = items[0].m
    size_n = items[0].n
    if n is not None and n != size_n:
        raise ValueError(f"strata are on n = {size_n}, got n = {n}")
    if any((t.m, t.n) != (m, size_n) for t in items):
        raise ValueError("strata must all share the same (m, n)")
    gen_maps = [sign_action_map(get_indexer(size_n, m), p) for p in partition_generators(group, size_n)]
    labels = kernels.orbit_labels([t.bits for t in items], gen_maps, comb(size_n, m))
    orbits = {}
    for t, label in zip(items, labels):
        orbits.setdefault(label, []).append(t)
    members = sorted(orbits.values(), key=lambda ts: ts[0].bits)
    return OrbitReport(
        group=group,
        n=size_n,
        m=m,
        orbit_count=len(members),
        orbit_sizes=tuple(sorted(len(ts) for ts in members)),
        representatives=tuple(ts[0] for ts in members),
    )
