import random
from itertools import combinations
from math import comb

import pytest

from tnzgr import counting, kernels, plane
from tnzgr.linalg import RationalMatrix
from tnzgr.pluecker import (
    SignVector,
    SubsetIndexer,
    ZeroMinorError,
    arrangement_isomorphic,
    canonicalize,
    get_indexer,
    sign_vector,
    subset_rank,
    subset_unrank,
    three_term_feasible,
)
from tnzgr.signedperm import act_perm_on_sign_vector

M213 = RationalMatrix.from_rows([[1, 0, 1], [0, 1, 1]])


def test_rank_examples():
    indexer = get_indexer(4, 2)
    assert subset_rank((1, 2), indexer) == 0
    assert subset_rank((3, 4), indexer) == 5
    # lex order on sorted pairs: 12,13,14,23,24,34
    assert subset_unrank(2, indexer) == (1, 4)


@pytest.mark.parametrize("n,m", [(5, 2), (6, 3), (8, 2), (12, 4), (12, 1)])
def test_rank_unrank_round_trip(n, m):
    indexer = SubsetIndexer(n, m)
    assert indexer.size == comb(n, m)
    for r in range(indexer.size):
        subset = indexer.unrank(r)
        assert indexer.rank(subset) == r
    for subset in combinations(range(1, n + 1), m):
        assert indexer.unrank(indexer.rank(subset)) == subset


def test_rank_contract_violations():
    indexer = get_indexer(4, 2)
    with pytest.raises(ValueError):
        indexer.unrank(6)
    with pytest.raises(ValueError):
        indexer.rank((2, 1))
    with pytest.raises(ValueError):
        indexer.rank((1, 5))


def test_sign_vector_examples():
    assert sign_vector(M213).to_string() == "++-"
    ident = RationalMatrix.from_rows([[1, 0], [0, 1]])
    assert sign_vector(ident).to_string() == "+"


def test_sign_vector_zero_minor():
    bad = RationalMatrix.from_rows([[1, 0, 1], [0, 1, 0]])
    with pytest.raises(ZeroMinorError, match=r"zero minor at \{1,3\}") as exc_info:
        sign_vector(bad)
    assert exc_info.value.subset == (1, 3)


def test_sign_vector_string_round_trip():
    s = SignVector.from_string(4, 2, "+-+--+")
    assert s.to_string() == "+-+--+"
    assert s.signs() == (1, -1, 1, -1, -1, 1)
    assert SignVector.from_signs(4, 2, s.signs()) == s
    assert s.sign_at((1, 3)) == -1


def test_sign_vector_validation():
    with pytest.raises(ValueError):
        SignVector(3, 2, 1 << 3)
    with pytest.raises(ValueError):
        SignVector.from_string(3, 2, "++0")
    with pytest.raises(ValueError):
        SignVector.from_signs(3, 2, (1, 0, 1))


def test_canonicalize_examples():
    s = SignVector.from_string(3, 2, "++-")
    assert canonicalize(s).to_string() == "++-"
    neg = SignVector.from_string(3, 2, "--+")
    assert canonicalize(neg).to_string() == "++-"


def test_canonicalize_properties():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 7)
        s = SignVector(n, 2, rng.getrandbits(comb(n, 2)))
        t = canonicalize(s)
        assert canonicalize(t.vector) == t
        assert canonicalize(s.negate()) == t
        assert t.bits & 1 == 0


def test_canonicalize_after_reflection():
    # left factor with negative determinant negates every minor sign
    rng = random.Random(31)
    for _ in range(25):
        while True:
            a = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
            if a[0][0] * a[1][1] - a[0][1] * a[1][0] < 0:
                break
        flipped = M213.left_multiply(a)
        assert sign_vector(flipped) == sign_vector(M213).negate()
        assert canonicalize(sign_vector(flipped)) == canonicalize(sign_vector(M213))


def test_three_term_all_plus():
    assert three_term_feasible(SignVector.from_string(4, 2, "++++++"))


def test_three_term_single_negative_on_13():
    indexer = get_indexer(4, 2)
    bits = 1 << indexer.rank((1, 3))
    assert not three_term_feasible(SignVector(4, 2, bits))


def test_three_term_exhaustive_2_4():
    feasible = [bits for bits in range(64) if three_term_feasible(SignVector(4, 2, bits))]
    assert len(feasible) == 48
    canonical = [bits for bits in feasible if bits & 1 == 0]
    assert len(canonical) == 24
    assert len(canonical) == counting.count_strata_2d(4)


def test_three_term_vacuous_below_four_columns():
    assert three_term_feasible(SignVector.from_string(3, 2, "+-+"))
    with pytest.raises(ValueError):
        three_term_feasible(SignVector(3, 1, 0b101))


@pytest.mark.parametrize("m,n", [(2, 5), (2, 8), (3, 5), (3, 8)])
def test_realizable_implies_feasible(m, n):
    accepted, found = kernels.scan_samples(seed=2024 + 10 * m + n, k0=0, k1=400, m=m, n=n, bound=50)
    assert accepted > 0
    for bits in found:
        assert three_term_feasible(SignVector(n, m, bits))


def test_isomorphic_column_reversal():
    mat = RationalMatrix.from_rows([[1, 0, 1, 2], [0, 1, 1, 3]])
    reversed_cols = mat.permute_columns((4, 3, 2, 1))
    ok, sigma = arrangement_isomorphic(mat, reversed_cols)
    assert ok
    moved = canonicalize(act_perm_on_sign_vector(sigma, sign_vector(reversed_cols)))
    assert moved == canonicalize(sign_vector(mat))


def test_isomorphic_left_multiplication():
    mat = RationalMatrix.from_rows([[1, 0, 1, 2], [0, 1, 1, 3]])
    ok, sigma = arrangement_isomorphic(mat, mat.left_multiply([[2, 1], [5, 3]]))
    assert ok
    assert sigma == (1, 2, 3, 4)


def test_isomorphic_distinguishes_orbits_at_n4():
    witnesses = plane.stratum_witnesses(4)
    report = counting.orbit_partition(witnesses.keys(), "sn", 4)
    assert report.orbit_count == 2
    w0 = witnesses[report.representatives[0]]
    w1 = witnesses[report.representatives[1]]
    ok, sigma = arrangement_isomorphic(w0, w1)
    assert not ok and sigma is None
    # same-orbit pair stays isomorphic
    ok2, _ = arrangement_isomorphic(w0, w0.permute_columns((2, 1, 3, 4)))
    assert ok2


def test_isomorphic_dimension_mismatch():
    with pytest.raises(ValueError):
        arrangement_isomorphic(M213, RationalMatrix.from_rows([[1, 0], [0, 1]]))
