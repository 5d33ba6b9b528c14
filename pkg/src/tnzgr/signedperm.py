"""The signed permutation group and its actions on sign vectors.

An element is a sequence (a_1, ..., a_n) of nonzero integers whose
absolute values permute {1, ..., n}; the associated matrix has column i
equal to sgn(a_i) * e_{|a_i|}, and composition matches multiplication of
those matrices.  The cyclic subgroup of order 2n generated by
(-n, 1, 2, ..., n-1) indexes the orientation sign matrices of the plane
module through its cosets.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .pluecker import SignVector, canonicalize, get_indexer


@dataclass(frozen=True)
class SignedPerm:
    """Signed permutation in one-line form, 1-based values."""

    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        if sorted(abs(a) for a in self.entries) != list(range(1, n + 1)):
            raise ValueError(f"{self.entries} is not a signed permutation")

    @property
    def n(self):
        return len(self.entries)

    def sigma(self):
        """The underlying plain permutation i -> |a_i| as a tuple of images."""
        return tuple(abs(a) for a in self.entries)

    def signs(self):
        return tuple(1 if a > 0 else -1 for a in self.entries)

    def matrix(self):
        """Associated n x n signed permutation matrix (rows of ints)."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i, a in enumerate(self.entries):
            rows[abs(a) - 1][i] = 1 if a > 0 else -1
        return tuple(tuple(r) for r in rows)

    def to_text(self):
        return ",".join(str(a) for a in self.entries)

    @classmethod
    def from_text(cls, text):
        try:
            values = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse signed permutation {text!r}") from None
        return cls(values)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_parts(cls, sigma, signs):
        return cls(tuple(s * v for s, v in zip(signs, sigma)))


def compose(p, q):
    """Product p . q (q applied first), matching signed-matrix multiplication."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    out = []
    for a in q.entries:
        b = p.entries[abs(a) - 1]
        out.append(b if a > 0 else -b)
    return SignedPerm(tuple(out))


def inverse(p):
    out = [0] * p.n
    for i, a in enumerate(p.entries, start=1):
        out[abs(a) - 1] = i if a > 0 else -i
    return SignedPerm(tuple(out))


def kn_generator(n):
    """The order-2n element (-n, 1, 2, ..., n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return SignedPerm((-n,) + tuple(range(1, n)))


@lru_cache(maxsize=None)
def kn_elements(n):
    """All 2n powers of the cyclic generator, as a tuple."""
    g = kn_generator(n)
    out = [SignedPerm.identity(n)]
    cur = g
    while cur != out[0]:
        out.append(cur)
        cur = compose(g, cur)
    return tuple(out)


def in_kn(p):
    return p in set(kn_elements(p.n))


def iter_coset_reps(n):
    """Yield the coset representatives (1, a_2, ..., a_n), one per coset.

    The tail runs over all signed permutations of 2..n: every element of
    the group lies in exactly one rep * K_n, so these index the
    orientation sign matrices.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    values = range(2, n + 1)
    for perm in permutations(values):
        for neg in _sign_patterns(n - 1):
            yield SignedPerm((1,) + tuple(-v if neg >> i & 1 else v for i, v in enumerate(perm)))


def _sign_patterns(k):
    return range(1 << k)


def coset_reps(n):
    return list(iter_coset_reps(n))


def act_perm_on_sign_vector(sigma, s):
    """Relabel points by the plain permutation sigma (tuple of 1-based images).

    The entry at subset I of the result is the entry of s at the sorted
    preimage subset, times the sign of the permutation that sorts the
    preimage tuple.  Agrees with recomputing signs from the witness with
    columns moved so that new column i is old column sigma^-1(i).
    """
    if len(sigma) != s.n:
        raise ValueError(f"size mismatch: permutation on {len(sigma)}, sign vector on {s.n}")
    srcs, flips = sign_action_map(get_indexer(s.n, s.m), SignedPerm(tuple(sigma)))
    return _apply_map(s, srcs, flips)


def act_reflection_on_sign_vector(d, s):
    """Flip the entry at each subset I by the product of d_i over i in I."""
    if len(d) != s.n:
        raise ValueError(f"size mismatch: reflection on {len(d)}, sign vector on {s.n}")
    if set(d) - {1, -1}:
        raise ValueError("reflection entries must be +1 or -1")
    indexer = get_indexer(s.n, s.m)
    flips = 0
    for r, subset in enumerate(indexer.subsets):
        if sum(1 for i in subset if d[i - 1] < 0) & 1:
            flips |= 1 << r
    return SignVector(s.n, s.m, s.bits ^ flips)


def act_signed_perm_on_stratum(p, t):
    """Action of a signed permutation on a stratum (reflect, permute, re-canonicalize)."""
    if p.n != t.n:
        raise ValueError(f"size mismatch: group element on {p.n}, stratum on {t.n}")
    srcs, flips = sign_action_map(get_indexer(t.n, t.m), p)
    return canonicalize(_apply_map(t.vector, srcs, flips))


def _apply_map(s, srcs, flips):
    bits = s.bits
    out = flips
    for r, src in enumerate(srcs):
        out ^= ((bits >> src) & 1) << r
    return SignVector(s.n, s.m, out)


def sign_action_map(indexer, p):
    """Position map and flip mask for the packed action of p on sign vectors.

    The action scales column i by sign(a_i) and then moves it to position
    |a_i|; on packed vectors this is bit r of the source moved to bit
    position ``srcs.index`` with an XOR mask, so repeated applications
    (orbit searches) reduce to table lookups.
    """
    inv = inverse(p)
    preimage = inv.sigma()
    negatives = [a < 0 for a in p.entries]
    srcs = []
    flips = 0
    for r, subset in enumerate(indexer.subsets):
        pre = [preimage[i - 1] for i in subset]
        flip = sum(1 for j in pre if negatives[j - 1]) & 1
        flip ^= _inversion_parity(pre)
        srcs.append(indexer.rank(tuple(sorted(pre))))
        if flip:
            flips |= 1 << r
    return srcs, flips


def _inversion_parity(seq):
    inv = 0
    for i, j in combinations(range(len(seq)), 2):
        if seq[i] > seq[j]:
            inv ^= 1
    return inv
