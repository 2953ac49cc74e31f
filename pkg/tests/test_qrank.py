from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypcolor import qrank


@st.composite
def int_matrices(draw, max_n=7):
    r = draw(st.integers(1, max_n))
    c = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.integers(-4, 4), min_size=r * c, max_size=r * c))
    return np.array(vals, dtype=np.int64).reshape(r, c)


@given(int_matrices())
def test_bareiss_matches_numpy(m):
    assert qrank.bareiss_rank(m) == np.linalg.matrix_rank(m.astype(float))


@given(int_matrices())
def test_modular_route_matches_bareiss(m):
    assert qrank.rational_rank(m, max_bareiss=0) == qrank.bareiss_rank(m)


@given(st.integers(-30, 30), st.integers(1, 30))
def test_rational_reconstruction(n, d):
    p = qrank.PRIMES[0]
    a = n * pow(d, -1, p) % p
    assert qrank.rational_reconstruct(a, p) == Fraction(n, d)


def test_rank_deficient_low_rank_product():
    rng = np.random.default_rng(0)
    u = rng.integers(-3, 4, size=(40, 5))
    v = rng.integers(-3, 4, size=(5, 40))
    m = u @ v
    assert qrank.rational_rank(m, max_bareiss=0) == qrank.bareiss_rank(m) == 5
    r, ker = qrank.lifted_kernel(m)
    assert r == 5 and len(ker) == 35
    assert not (m @ np.array(ker).T).any()


def test_rank_mod_small_prime_can_drop():
    m = np.array([[2, 0], [0, 1]])
    assert qrank.rank_mod_p(m, 2) == 1
    assert qrank.rational_rank(m) == 2
