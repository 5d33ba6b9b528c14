import random
from math import factorial

import pytest

from tnzgr import counting, plane
from tnzgr.linalg import RationalMatrix
from tnzgr.pluecker import canonicalize, sign_vector
from tnzgr.signedperm import SignedPerm, kn_elements

M213 = RationalMatrix.from_rows([[1, 0, 1], [0, 1, 1]])


def random_generic_2xn(rng, n, bound=9):
    while True:
        xs = [rng.randint(-bound, bound) for _ in range(n)]
        ys = [rng.randint(-bound, bound) for _ in range(n)]
        if all(xs[i] * ys[j] - ys[i] * xs[j] != 0 for i in range(n) for j in range(i + 1, n)):
            return RationalMatrix.from_rows([xs, ys])


def test_orientation_example():
    o = plane.orientation_matrix(M213)
    assert (o.sign(1, 2), o.sign(1, 3), o.sign(2, 3)) == (1, 1, -1)
    assert o.sign(2, 1) == -1


def test_orientation_requires_two_rows():
    with pytest.raises(ValueError):
        plane.orientation_matrix(RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))


def test_orientation_rejects_parallel_columns():
    with pytest.raises(ValueError, match="columns 1 and 3"):
        plane.orientation_matrix(RationalMatrix.from_rows([[1, 0, 2], [1, 1, 2]]))


def test_sorted_positive_arrangement_gives_standard():
    witness = plane.witness_matrix_for_rep(SignedPerm.identity(5))
    assert plane.orientation_matrix(witness) == plane.standard_orientation(5)


def test_reversal_conjugates_orientation():
    # column reversal relabels both indices; transpose equals entrywise negation
    rng = random.Random(20)
    for _ in range(25):
        n = rng.randint(2, 7)
        mat = random_generic_2xn(rng, n)
        rev = mat.permute_columns(tuple(range(n, 0, -1)))
        o = plane.orientation_matrix(mat)
        o_rev = plane.orientation_matrix(rev)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert o_rev.sign(i, j) == o.sign(n + 1 - i, n + 1 - j)
                assert o.transpose().sign(i, j) == -o.sign(i, j)


def test_reversal_transposes_standard_witness():
    # when the orientation matrix is the standard one, reversal lands exactly
    # on its transpose (the general identity conjugates instead)
    for n in (2, 3, 5, 6):
        witness = plane.witness_matrix_for_rep(SignedPerm.identity(n))
        rev = witness.permute_columns(tuple(range(n, 0, -1)))
        assert plane.orientation_matrix(rev) == plane.standard_orientation(n).transpose()


def test_upper_triangle_matches_sign_vector():
    rng = random.Random(21)
    for _ in range(25):
        mat = random_generic_2xn(rng, rng.randint(2, 7))
        assert plane.upper_triangle_vector(plane.orientation_matrix(mat)) == sign_vector(mat)


def test_combinatorial_rep_axis_examples():
    assert plane.combinatorial_rep(RationalMatrix.from_rows([[1, 0], [0, 1]])) == SignedPerm((1, 2))
    assert plane.combinatorial_rep(RationalMatrix.from_rows([[1, 0], [0, -1]])) == SignedPerm((1, -2))


def test_combinatorial_rep_rejects_equal_lines():
    with pytest.raises(ValueError, match="not generic"):
        plane.combinatorial_rep(RationalMatrix.from_rows([[1, 2], [2, 4]]))


def test_sorted_rep_sign_identity():
    # after angle sorting, det signs are recovered from the one-line encoding
    rng = random.Random(22)
    for _ in range(60):
        n = rng.randint(2, 8)
        mat = random_generic_2xn(rng, n)
        tau = plane.angular_positions(mat)
        order = sorted(range(1, n + 1), key=lambda c: tau[c - 1])
        cols = [mat.column(c) for c in order]
        sorted_mat = RationalMatrix.from_rows([[c[0] for c in cols], [c[1] for c in cols]])
        a = plane.combinatorial_rep(sorted_mat).entries
        assert tuple(abs(v) for v in a) == tuple(range(1, n + 1))
        for i in range(n):
            for j in range(n):
                if i != j:
                    det = cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0]
                    assert (det > 0) == (a[i] * a[j] * (j - i) > 0)


def test_orientation_from_rep_identity_and_example():
    assert plane.orientation_from_rep(SignedPerm.identity(4)) == plane.standard_orientation(4)
    assert plane.orientation_from_rep(SignedPerm((1, -2))).sign(1, 2) == -1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cyclic_subgroup_stabilizes_standard(n):
    for k in kn_elements(n):
        assert plane.orientation_from_rep(k) == plane.standard_orientation(n)


def test_orientation_from_rep_matches_witness():
    rng = random.Random(23)
    for _ in range(50):
        n = rng.randint(2, 7)
        mat = random_generic_2xn(rng, n)
        rep = plane.combinatorial_rep(mat)
        assert plane.orientation_from_rep(rep) == plane.orientation_matrix(mat)


def test_conjugation_consistency():
    rng = random.Random(24)
    for _ in range(40):
        n = rng.randint(2, 7)
        mat = random_generic_2xn(rng, n)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        inv = [0] * n
        for i, img in enumerate(sigma, 1):
            inv[img - 1] = i
        o = plane.orientation_matrix(mat)
        moved = plane.orientation_matrix(mat.permute_columns(tuple(sigma)))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert moved.sign(i, j) == o.sign(inv[i - 1], inv[j - 1])


def test_witness_matrix_round_trip():
    rng = random.Random(25)
    for _ in range(60):
        n = rng.randint(2, 7)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        rep = SignedPerm(tuple(rng.choice((1, -1)) * v for v in perm))
        witness = plane.witness_matrix_for_rep(rep)
        assert plane.combinatorial_rep(witness) == rep


def test_enumerate_n2():
    strata = plane.enumerate_strata_2d(2)
    assert len(strata) == 1
    assert next(iter(strata)).to_string() == "+"


def test_enumerate_n3_is_everything():
    strata = plane.enumerate_strata_2d(3)
    assert {t.to_string() for t in strata} == {"+++", "++-", "+-+", "+--"}
    # each stratum carries an explicit realizing witness
    for stratum, witness in plane.stratum_witnesses(3).items():
        assert canonicalize(sign_vector(witness)) == stratum


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumerate_counts(n):
    assert len(plane.enumerate_strata_2d(n)) == counting.count_strata_2d(n)
    assert len(plane.enumerate_orientation_patterns(n)) == 2 ** (n - 1) * factorial(n - 1)


def test_enumerate_guards():
    with pytest.raises(ValueError):
        plane.enumerate_strata_2d(1)
    with pytest.raises(ValueError, match="allow_large"):
        plane.enumerate_strata_2d(9)
    with pytest.raises(ValueError, match="not supported"):
        plane.enumerate_strata_2d(11, allow_large=True)


def test_strata_with_reps_consistent():
    for stratum, rep in plane.strata_with_reps(4).items():
        read_back = canonicalize(plane.upper_triangle_vector(plane.orientation_from_rep(rep)))
        assert read_back == stratum
    assert len(plane.strata_with_reps(4)) == 24
