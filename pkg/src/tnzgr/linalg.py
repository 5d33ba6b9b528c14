"""Exact rational matrices and maximal minors.

A point of the Grassmannian is represented by an m x n matrix of
rationals with m <= n; its maximal minors (determinants of the m x m
submatrices on each column m-subset) are computed exactly.  Column
subsets are 1-based sorted tuples throughout.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import json
import math


class MatrixFormatError(ValueError):
    """Raised when matrix-file content is malformed."""


def _parse_rational(text, row, col):
    # file entries are "p" or "p/q" in base 10; positions reported 1-based
    if not isinstance(text, str):
        raise MatrixFormatError(f"entry at ({row},{col}) is not a string")
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise MatrixFormatError(f"malformed rational {text!r} at ({row},{col})") from None
    if q == 0:
        raise MatrixFormatError(f"zero denominator at ({row},{col})")
    return Fraction(p, q)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable m x n matrix of Fractions, rows outer."""

    m: int
    n: int
    entries: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("need at least one row")
        if self.n < self.m:
            raise ValueError(f"need n >= m, got m={self.m}, n={self.n}")
        if len(self.entries) != self.m or any(len(row) != self.n for row in self.entries):
            raise ValueError("entry grid does not match declared dimensions")

    @classmethod
    def from_rows(cls, rows):
        grid = tuple(tuple(Fraction(x) for x in row) for row in rows)
        m = len(grid)
        n = len(grid[0]) if grid else 0
        return cls(m, n, grid)

    def column(self, j):
        """Column j (1-based) as a tuple of Fractions."""
        return tuple(self.entries[i][j - 1] for i in range(self.m))

    def permute_columns(self, sigma):
        """Column i of the result is column sigma^-1(i) of self (1-based images)."""
        inv = [0] * self.n
        for i, img in enumerate(sigma, start=1):
            inv[img - 1] = i
        grid = tuple(tuple(row[inv[j] - 1] for j in range(self.n)) for row in self.entries)
        return RationalMatrix(self.m, self.n, grid)

    def scale_columns(self, scalars):
        """Multiply column j by scalars[j-1]."""
        factors = [Fraction(t) for t in scalars]
        if len(factors) != self.n:
            raise ValueError("need one scalar per column")
        grid = tuple(tuple(x * factors[j] for j, x in enumerate(row)) for row in self.entries)
        return RationalMatrix(self.m, self.n, grid)

    def left_multiply(self, a):
        """A . self for a square m x m matrix given as rows of rationals."""
        rows = [[Fraction(x) for x in row] for row in a]
        if len(rows) != self.m or any(len(r) != self.m for r in rows):
            raise ValueError("left factor must be m x m")
        grid = tuple(
            tuple(sum(rows[i][k] * self.entries[k][j] for k in range(self.m)) for j in range(self.n))
            for i in range(self.m)
        )
        return RationalMatrix(self.m, self.n, grid)

    def to_json(self):
        obj = {
            "m": self.m,
            "n": self.n,
            "entries": [[_format_rational(x) for x in row] for row in self.entries],
        }
        return json.dumps(obj)


def _format_rational(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_matrix(text):
    """Parse matrix-file content: {"m": int, "n": int, "entries": [[str,...],...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"not valid JSON: {exc}") from None
    return matrix_from_obj(obj)


def matrix_from_obj(obj):
    """Same as parse_matrix, starting from decoded JSON."""
    if not isinstance(obj, dict) or not {"m", "n", "entries"} <= set(obj):
        raise MatrixFormatError('expected an object with keys "m", "n", "entries"')
    m, n, rows = obj["m"], obj["n"], obj["entries"]
    if not (isinstance(m, int) and isinstance(n, int)):
        raise MatrixFormatError("m and n must be integers")
    if m < 1:
        raise MatrixFormatError("need at least one row")
    if m > n:
        raise MatrixFormatError(f"need n >= m, got m={m}, n={n}")
    if not isinstance(rows, list) or len(rows) != m:
        raise MatrixFormatError(f"expected {m} rows, got {len(rows) if isinstance(rows, list) else 'non-list'}")
    grid = []
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError(f"row {i} has {len(row) if isinstance(row, list) else 'no'} entries, expected {n}")
        grid.append(tuple(_parse_rational(x, i, j) for j, x in enumerate(row, start=1)))
    return RationalMatrix(m, n, tuple(grid))


def det_bareiss(rows):
    """Exact determinant of a square matrix of Fractions.

    Denominators are cleared per column first (the determinant picks up the
    product of the clearing factors), then fraction-free Bareiss elimination
    runs over plain integers, which keeps intermediate values to minor-sized
    bignums instead of the exponential growth of naive fraction arithmetic.
    """
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("matrix is not square")
    work = [[Fraction(x) for x in row] for row in rows]
    scale = 1
    for j in range(k):
        col_lcm = 1
        for i in range(k):
            col_lcm = col_lcm * work[i][j].denominator // math.gcd(col_lcm, work[i][j].denominator)
        scale *= col_lcm
        for i in range(k):
            work[i][j] *= col_lcm
    grid = [[int(x) for x in row] for row in work]
    det = _det_bareiss_int(grid)
    return Fraction(det, scale)


def _det_bareiss_int(grid):
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


def det_laplace(rows):
    """Cofactor-expansion determinant; independent cross-check for small sizes."""
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("matrix is not square")
    if k > 4:
        raise ValueError("Laplace oracle is kept for sizes up to 4")
    return _laplace(tuple(tuple(Fraction(x) for x in row) for row in rows))


def _laplace(rows):
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = Fraction(0)
    rest = rows[1:]
    for j in range(k):
        if rows[0][j] == 0:
            continue
        sub = tuple(tuple(r[t] for t in range(k) if t != j) for r in rest)
        term = rows[0][j] * _laplace(sub)
        total += term if j % 2 == 0 else -term
    return total


def maximal_minor(mat, cols):
    """Determinant of the submatrix of mat on the given sorted column subset."""
    cols = tuple(cols)
    if len(cols) != mat.m:
        raise ValueError(f"subset size {len(cols)} != m = {mat.m}")
    if len(set(cols)) != len(cols) or any(not 1 <= c <= mat.n for c in cols):
        raise ValueError(f"invalid column subset {cols} for n = {mat.n}")
    if list(cols) != sorted(cols):
        raise ValueError(f"column subset must be sorted, got {cols}")
    sub = [[mat.entries[i][c - 1] for c in cols] for i in range(mat.m)]
    return det_bareiss(sub)


def is_totally_nonzero(mat):
    """True iff every maximal minor is nonzero (which forces rank m)."""
    for cols in combinations(range(1, mat.n + 1), mat.m):
        if maximal_minor(mat, cols) == 0:
            return False
    return True
