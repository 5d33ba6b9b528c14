"""Dimension-two machinery: orientation sign matrices and full enumeration.

For a totally nonzero 2 x n matrix the pairwise determinant signs form an
antisymmetric n x n sign matrix; reading its strict upper triangle in
subset order recovers the sign vector of the point.  Every such matrix is
a conjugate of the standard one (upper triangle all +1) by a signed
permutation matrix, with conjugating elements unique up to the cyclic
subgroup of order 2n, which is what makes exhaustive enumeration of the
strata possible.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from math import factorial

from . import kernels
from .linalg import RationalMatrix
from .pluecker import SignVector, Stratum, get_indexer
from .signedperm import SignedPerm, iter_coset_reps

ENUM_HARD_CAP = 10
ENUM_SOFT_CAP = 8


@dataclass(frozen=True)
class OrientationSignMatrix:
    """Antisymmetric n x n matrix over {-1, 0, +1}: zero diagonal, nonzero elsewhere."""

    n: int
    cells: tuple

    def __post_init__(self):
        if len(self.cells) != self.n or any(len(row) != self.n for row in self.cells):
            raise ValueError("cell grid does not match declared size")
        for i in range(self.n):
            if self.cells[i][i] != 0:
                raise ValueError("diagonal must be zero")
            for j in range(i + 1, self.n):
                if self.cells[i][j] not in (1, -1) or self.cells[i][j] != -self.cells[j][i]:
                    raise ValueError(f"cells ({i+1},{j+1}) violate antisymmetry or are zero")

    def sign(self, i, j):
        """Entry at 1-based position (i, j)."""
        return self.cells[i - 1][j - 1]

    def transpose(self):
        return OrientationSignMatrix(self.n, tuple(tuple(self.cells[j][i] for j in range(self.n)) for i in range(self.n)))


def standard_orientation(n):
    """Upper triangle all +1: the matrix of an angle-sorted positive arrangement."""
    cells = tuple(tuple(0 if i == j else (1 if i < j else -1) for j in range(n)) for i in range(n))
    return OrientationSignMatrix(n, cells)


def orientation_matrix(mat):
    """Pairwise column determinant signs of a totally nonzero 2 x n matrix."""
    if mat.m != 2:
        raise ValueError("orientation sign matrices are defined for m = 2 only")
    xs = mat.entries[0]
    ys = mat.entries[1]
    n = mat.n
    cells = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = xs[i] * ys[j] - ys[i] * xs[j]
            if d == 0:
                raise ValueError(f"columns {i+1} and {j+1} span the same line")
            s = 1 if d > 0 else -1
            cells[i][j] = s
            cells[j][i] = -s
    return OrientationSignMatrix(n, tuple(tuple(row) for row in cells))


def upper_triangle_vector(o):
    """Strict upper triangle as a sign vector on pairs, in subset-rank order."""
    indexer = get_indexer(o.n, 2)
    bits = 0
    for r, (i, j) in enumerate(indexer.subsets):
        if o.cells[i - 1][j - 1] < 0:
            bits |= 1 << r
    return SignVector(o.n, 2, bits)


def _half_plane_rep(v):
    x, y = v
    if y < 0 or (y == 0 and x < 0):
        return (-x, -y)
    if x == 0 and y == 0:
        raise ValueError("zero column has no direction")
    return (x, y)


def _angle_class(u):
    # 0: positive x-axis, 1: open first quadrant, 2: positive y-axis, 3: open second quadrant
    x, y = u
    if y == 0:
        return 0
    if x > 0:
        return 1
    if x == 0:
        return 2
    return 3


def _compare_lines(u, v):
    cu, cv = _angle_class(u), _angle_class(v)
    if cu != cv:
        return -1 if cu < cv else 1
    cross = u[0] * v[1] - u[1] * v[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def angular_positions(mat):
    """Position of each column's line in the exact angle order on [0, pi).

    Comparisons use half-plane representatives and integer/rational cross
    products only; no floating point is involved.
    """
    reps = [_half_plane_rep(mat.column(i)[:2]) for i in range(1, mat.n + 1)]
    order = sorted(range(mat.n), key=cmp_to_key(lambda a, b: _compare_lines(reps[a], reps[b])))
    for a, b in zip(order, order[1:]):
        if _compare_lines(reps[a], reps[b]) == 0:
            raise ValueError(f"columns {a+1} and {b+1} span the same line; arrangement is not generic")
    tau = [0] * mat.n
    for pos, col in enumerate(order, start=1):
        tau[col] = pos
    return tuple(tau)


def combinatorial_rep(mat):
    """Signed one-line encoding of a generic 2 x n matrix.

    Entry i is (sorted angular position of column i's line), signed by the
    half-plane of the column: the sign of y, or of x for the one possible
    horizontal line.  For an already angle-sorted matrix this is the
    (+-1, +-2, ..., +-n) form; in general it is a signed permutation.
    """
    if mat.m != 2:
        raise ValueError("combinatorial representations are defined for m = 2 only")
    tau = angular_positions(mat)
    entries = []
    for i in range(1, mat.n + 1):
        x, y = mat.column(i)
        if y != 0:
            s = 1 if y > 0 else -1
        else:
            s = 1 if x > 0 else -1
        entries.append(s * tau[i - 1])
    return SignedPerm(tuple(entries))


def orientation_from_rep(rep):
    """Orientation sign matrix of any witness having the given representation.

    Conjugating the standard matrix by the inverse of rep's signed
    permutation matrix collapses to a closed form on entries:
    sign(rep_i) * sign(rep_j) * sign(|rep_j| - |rep_i|).
    """
    n = rep.n
    e = rep.entries
    cells = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                s = 1 if (e[i] > 0) == (e[j] > 0) else -1
                if abs(e[j]) < abs(e[i]):
                    s = -s
                cells[i][j] = s
    return OrientationSignMatrix(n, tuple(tuple(row) for row in cells))


def _check_enum_size(n, allow_large):
    if n < 2:
        raise ValueError("enumeration needs n >= 2")
    if n > ENUM_HARD_CAP:
        raise ValueError(f"enumeration beyond n = {ENUM_HARD_CAP} is not supported")
    if n > ENUM_SOFT_CAP and not allow_large:
        raise ValueError(
            f"n = {n} enumerates {2 ** (n - 2) * factorial(n - 1)} strata; pass allow_large=True to proceed"
        )


def enumerate_strata_2d(n, allow_large=False):
    """The full set of strata for m = 2, one canonical sign vector each."""
    _check_enum_size(n, allow_large)
    return {Stratum(SignVector(n, 2, bits)) for bits in kernels.packed_strata_2d(n, canonical=True)}


def enumerate_orientation_patterns(n, allow_large=False):
    """Packed upper triangles of all orientation sign matrices (no negation folding)."""
    _check_enum_size(n, allow_large)
    return kernels.packed_strata_2d(n, canonical=False)


def strata_with_reps(n, allow_large=False):
    """Map each stratum to one coset representative that realizes it.

    Slower than enumerate_strata_2d (walks representatives one by one in
    Python); used where an explicit witness per stratum is wanted.
    """
    _check_enum_size(n, allow_large)
    indexer = get_indexer(n, 2)
    full = (1 << indexer.size) - 1
    found = {}
    for rep in iter_coset_reps(n):
        e = rep.entries
        bits = 0
        for r, (i, j) in enumerate(indexer.subsets):
            s = (e[i - 1] > 0) == (e[j - 1] > 0)
            if abs(e[j - 1]) < abs(e[i - 1]):
                s = not s
            if not s:
                bits |= 1 << r
        if bits & 1:
            bits ^= full
        if bits not in found:
            found[bits] = rep
    return {Stratum(SignVector(n, 2, bits)): rep for bits, rep in found.items()}


def witness_matrix_for_rep(rep):
    """An integer 2 x n matrix whose combinatorial representation is rep.

    Sorted position j gets direction (1, 0) for j = 1 and (n - j, 1)
    otherwise (strictly increasing angles on rational slopes); column i is
    that direction at position |rep_i|, negated when rep_i < 0.
    """
    n = rep.n
    cols = []
    for a in rep.entries:
        q = abs(a)
        u = (1, 0) if q == 1 else (n - q, 1)
        cols.append((u[0], u[1]) if a > 0 else (-u[0], -u[1]))
    return RationalMatrix.from_rows([[c[0] for c in cols], [c[1] for c in cols]])


def stratum_witnesses(n, allow_large=False):
    """One integer witness matrix per stratum, via strata_with_reps."""
    return {stratum: witness_matrix_for_rep(rep) for stratum, rep in strata_with_reps(n, allow_large).items()}
