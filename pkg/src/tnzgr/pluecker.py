"""Sign vectors of maximal minors, canonical strata, and sign feasibility.

A totally nonzero m x n matrix induces a vector of C(n, m) signs, one per
column m-subset in lexicographic order.  Two matrices lie in the same
stratum of the totally nonzero Grassmannian exactly when their sign
vectors agree up to global negation, so the canonical stratum
representative is the member of {s, -s} whose first entry is +1.

Sign vectors are stored packed: bit r of an integer is set iff the entry
at subset rank r is -1.  Packing makes hashing, canonicalization (a
single XOR) and bulk enumeration cheap.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .linalg import maximal_minor


class ZeroMinorError(ValueError):
    """Raised when a matrix expected to be totally nonzero has a zero minor."""

    def __init__(self, subset):
        self.subset = tuple(subset)
        super().__init__("zero minor at {%s}" % ",".join(map(str, self.subset)))


class SubsetIndexer:
    """Lexicographic ranking of the sorted m-subsets of {1, ..., n}."""

    def __init__(self, n, m):
        if not 1 <= m <= n:
            raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
        self.n = n
        self.m = m
        self.subsets = tuple(combinations(range(1, n + 1), m))
        self.size = len(self.subsets)
        self._rank = {s: r for r, s in enumerate(self.subsets)}

    def rank(self, subset):
        try:
            return self._rank[tuple(subset)]
        except KeyError:
            raise ValueError(f"{tuple(subset)} is not a sorted {self.m}-subset of [{self.n}]") from None

    def unrank(self, r):
        if not 0 <= r < self.size:
            raise ValueError(f"rank {r} out of range [0, {self.size})")
        return self.subsets[r]


@lru_cache(maxsize=None)
def get_indexer(n, m):
    return SubsetIndexer(n, m)


def subset_rank(subset, indexer):
    return indexer.rank(subset)


def subset_unrank(r, indexer):
    return indexer.unrank(r)


@dataclass(frozen=True)
class SignVector:
    """Length-C(n,m) vector over {+1, -1}; bit r set in ``bits`` means -1 at rank r."""

    n: int
    m: int
    bits: int

    def __post_init__(self):
        size = comb(self.n, self.m)
        if not 0 <= self.bits < (1 << size):
            raise ValueError(f"packed value out of range for C({self.n},{self.m}) = {size} entries")

    @property
    def size(self):
        return comb(self.n, self.m)

    @classmethod
    def from_signs(cls, n, m, signs):
        signs = tuple(signs)
        if len(signs) != comb(n, m):
            raise ValueError(f"expected {comb(n, m)} signs, got {len(signs)}")
        bits = 0
        for r, s in enumerate(signs):
            if s == -1:
                bits |= 1 << r
            elif s != 1:
                raise ValueError(f"sign entries must be +1 or -1, got {s!r}")
        return cls(n, m, bits)

    @classmethod
    def from_string(cls, n, m, text):
        if len(text) != comb(n, m) or set(text) - {"+", "-"}:
            raise ValueError(f"expected a +/- string of length {comb(n, m)}, got {text!r}")
        bits = 0
        for r, ch in enumerate(text):
            if ch == "-":
                bits |= 1 << r
        return cls(n, m, bits)

    def signs(self):
        return tuple(-1 if (self.bits >> r) & 1 else 1 for r in range(self.size))

    def to_string(self):
        return "".join("-" if (self.bits >> r) & 1 else "+" for r in range(self.size))

    def sign_at(self, subset):
        r = get_indexer(self.n, self.m).rank(subset)
        return -1 if (self.bits >> r) & 1 else 1

    def negate(self):
        return SignVector(self.n, self.m, self.bits ^ ((1 << self.size) - 1))


@dataclass(frozen=True)
class Stratum:
    """A stratum, named by the canonical member of {s, -s} (leading +1)."""

    vector: SignVector

    def __post_init__(self):
        if self.vector.bits & 1:
            raise ValueError("stratum representative must have leading +1")

    @property
    def n(self):
        return self.vector.n

    @property
    def m(self):
        return self.vector.m

    @property
    def bits(self):
        return self.vector.bits

    def to_string(self):
        return self.vector.to_string()


def canonicalize(s):
    """The stratum of s: flip globally if needed so the first entry is +1."""
    if s.bits & 1:
        return Stratum(s.negate())
    return Stratum(s)


def sign_vector(mat):
    """Sign of every maximal minor, in subset-rank order; rejects zero minors."""
    indexer = get_indexer(mat.n, mat.m)
    bits = 0
    for r, subset in enumerate(indexer.subsets):
        d = maximal_minor(mat, subset)
        if d == 0:
            raise ZeroMinorError(subset)
        if d < 0:
            bits |= 1 << r
    return SignVector(mat.n, mat.m, bits)


def three_term_feasible(s):
    """Necessary sign condition for a stratum to be nonempty.

    For each (m-2)-subset S and each a < b < c < d disjoint from S, the
    quadratic relation on minors

        D[S+ac] * D[S+bd] = D[S+ab] * D[S+cd] + D[S+ad] * D[S+bc]

    forces, at sign level: if both right-hand products carry the same sign,
    the left-hand product must carry it too.  Returns False iff some
    quadruple violates that.  Feasibility is necessary for the stratum to
    be realizable, not sufficient.
    """
    if s.m < 2:
        raise ValueError("three-term check needs m >= 2")
    indexer = get_indexer(s.n, s.m)
    bits = s.bits
    ground = range(1, s.n + 1)
    for base in combinations(ground, s.m - 2):
        rest = [x for x in ground if x not in base]
        for a, b, c, d in combinations(rest, 4):
            p1 = ((bits >> indexer.rank(tuple(sorted(base + (a, b))))) ^ (bits >> indexer.rank(tuple(sorted(base + (c, d)))))) & 1
            p2 = ((bits >> indexer.rank(tuple(sorted(base + (a, d))))) ^ (bits >> indexer.rank(tuple(sorted(base + (b, c)))))) & 1
            if p1 != p2:
                continue
            q = ((bits >> indexer.rank(tuple(sorted(base + (a, c))))) ^ (bits >> indexer.rank(tuple(sorted(base + (b, d)))))) & 1
            if q != p1:
                return False
    return True


def arrangement_isomorphic(mat_a, mat_b):
    """Decide whether two witnesses give isomorphic generic point arrangements.

    True iff some relabeling of the n points maps one stratum onto the
    other.  Searches by closing the orbit of mat_b's stratum under adjacent
    transpositions (breadth-first, so the test stops as soon as the target
    appears) and returns (True, sigma) with a witnessing relabeling, or
    (False, None).
    """
    from .signedperm import SignedPerm, act_perm_on_sign_vector, compose

    if (mat_a.m, mat_a.n) != (mat_b.m, mat_b.n):
        raise ValueError("witnesses must share dimensions")
    target = canonicalize(sign_vector(mat_a))
    start = canonicalize(sign_vector(mat_b))
    n = mat_a.n
    identity = tuple(range(1, n + 1))
    if start == target:
        return True, identity
    gens = []
    for i in range(1, n):
        img = list(identity)
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(tuple(img))
    seen = {start.bits}
    frontier = [(start, identity)]
    while frontier:
        new_frontier = []
        for stratum, word in frontier:
            for g in gens:
                moved = canonicalize(act_perm_on_sign_vector(g, stratum.vector))
                if moved.bits in seen:
                    continue
                # word tracks the composed column relabeling applied so far
                sigma = compose(SignedPerm(g), SignedPerm(word)).entries
                if moved == target:
                    return True, sigma
                seen.add(moved.bits)
                new_frontier.append((moved, sigma))
        frontier = new_frontier
    return False, None
