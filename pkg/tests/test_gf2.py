from itertools import combinations, product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hypcolor import gf2
from hypcolor.gf2 import BinaryMatrix


@st.composite
def matrices(draw, max_rows=7, max_cols=11, min_rows=1):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(1, max_cols))
    data = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows))
    return BinaryMatrix(rows, cols, tuple(data))


def brute_row_space(m):
    out = set()
    for coeffs in product((0, 1), repeat=m.rows):
        v = 0
        for c, r in zip(coeffs, m.data):
            if c:
                v ^= r
        out.add(v)
    return out


def test_pack_unpack_roundtrip():
    assert gf2.pack([1, 0, 1, 1]) == 0b1101
    assert gf2.unpack(0b1101, 5) == [1, 0, 1, 1, 0]


def test_rejects_out_of_range_bits():
    with pytest.raises(ValueError):
        BinaryMatrix(1, 3, (0b1000,))


def test_from_strings_and_columns_agree():
    m = BinaryMatrix.from_strings(["110", "011"])
    assert m.columns() == [0b01, 0b11, 0b10]
    assert BinaryMatrix.from_columns(m.columns(), 2) == m
    assert m.T.T == m
    assert m.to_strings() == ["110", "011"]


def test_matmul_identity():
    m = BinaryMatrix.from_strings(["1011", "0110"])
    assert BinaryMatrix.identity(2) @ m == m
    assert m @ BinaryMatrix.identity(4) == m


def test_row_space_guard():
    with pytest.raises(gf2.EnumerationTooLarge):
        list(gf2.row_space(BinaryMatrix.identity(5), guard=4))


def test_min_distance_of_zero_space():
    with pytest.raises(gf2.UndefinedDistance):
        gf2.min_distance(BinaryMatrix.zeros(2, 3))


def test_repetition_and_hamming_codes():
    assert gf2.min_distance(BinaryMatrix.from_strings(["11111"])) == 5
    hamming = BinaryMatrix.from_strings(["1000110", "0100101", "0010011", "0001111"])
    assert gf2.min_distance(hamming) == 3
    assert gf2.weight_distribution(hamming) == [1, 0, 0, 7, 7, 0, 0, 1]


def test_left_equivalent_shape_mismatch():
    with pytest.raises(ValueError):
        gf2.left_equivalent(BinaryMatrix.identity(2), BinaryMatrix.identity(3))


@given(matrices())
def test_rref_idempotent(m):
    red, r, pivots = gf2.rref(m)
    assert gf2.rref(red)[0] == red
    assert len(pivots) == r == gf2.rank(m)


@given(matrices())
def test_rank_nullity(m):
    ker = gf2.kernel_basis(m)
    assert gf2.rank(m) + ker.rows == m.cols
    for v in ker.data:
        assert gf2.mat_vec(m, v) == 0


@given(matrices(max_rows=6, max_cols=9))
def test_row_space_matches_brute_force(m):
    space = list(gf2.row_space(m))
    assert len(space) == len(set(space)) == 2 ** gf2.rank(m)
    assert set(space) == brute_row_space(m)


@given(matrices(max_rows=6, max_cols=9))
def test_min_distance_matches_brute_force(m):
    words = [v for v in brute_row_space(m) if v]
    assume(words)
    assert gf2.min_distance(m) == min(gf2.weight(v) for v in words)


@given(matrices(max_rows=5, max_cols=7), st.integers(1, 4))
def test_no_k_columns_dependent_brute_force(m, k):
    assume(k <= m.cols)
    cols = m.columns()
    dependent = any(
        gf2.rank_of_vectors([cols[j] for j in subset]) < j_count
        for j_count in range(1, k + 1)
        for subset in combinations(range(m.cols), j_count)
    )
    assert gf2.no_k_columns_dependent(m, k) == (not dependent)


@given(matrices(), st.data())
def test_solve_row(m, data):
    target = data.draw(st.integers(0, (1 << m.cols) - 1))
    w = gf2.solve_row(m, target)
    if w is None:
        assert target not in brute_row_space(m)
    else:
        assert gf2.vec_mat(w, m) == target


@given(matrices(max_rows=5), st.data())
def test_left_equivalence_under_invertible_mixing(m, data):
    n = m.rows
    mix = data.draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    M = BinaryMatrix(n, n, tuple(mix))
    assume(gf2.rank(M) == n)
    assert gf2.left_equivalent(M @ m, m)


@given(matrices(max_rows=5, max_cols=8), st.data())
def test_vec_mat_is_linear(m, data):
    a = data.draw(st.integers(0, (1 << m.rows) - 1))
    b = data.draw(st.integers(0, (1 << m.rows) - 1))
    assert gf2.vec_mat(a ^ b, m) == gf2.vec_mat(a, m) ^ gf2.vec_mat(b, m)
    assert gf2.dot(a, a) == gf2.weight(a) % 2
