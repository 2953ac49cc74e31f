from collections import Counter
from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hypcolor import codes, gf2, toric
from hypcolor.gf2 import BinaryMatrix
from hypcolor.graphs import FacetGraph


@st.composite
def colored_graphs(draw, max_n=8, max_m=4):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(2, max_m))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    colors = draw(st.lists(st.integers(1, (1 << m) - 1), min_size=n, max_size=n))
    return FacetGraph.from_edges(list(range(n)), edges), toric.Coloring(m, colors)


@st.composite
def invertible(draw, n):
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    M = BinaryMatrix(n, n, tuple(rows))
    assume(gf2.rank(M) == n)
    return M


def recolor(c, M):
    return toric.Coloring(c.m, [gf2.mat_vec(M, x) for x in c.colors])


def test_coloring_rejects_zero_and_long_colors():
    with pytest.raises(ValueError):
        toric.Coloring(2, [1, 0])
    with pytest.raises(ValueError):
        toric.Coloring(2, [4])


def test_adjacent_equal_colors_are_reported():
    g = FacetGraph.from_edges([0, 1, 2], [(0, 1), (1, 2)])
    ok, bad = toric.validate_coloring(g, toric.Coloring(2, [1, 2, 2]))
    assert not ok
    assert bad.clique == (1, 2)


def test_single_edge_identity_coloring():
    g = FacetGraph.from_edges([0, 1], [(0, 1)])
    c = toric.Coloring(2, [1, 2])
    assert toric.validate_coloring(g, c)[0]
    assert [b for _, b in toric.betti_contributions(g, c)] == [0, 0, 0]
    assert toric.first_betti(g, c) == 0


def test_disconnected_support_counts():
    # a 4-cycle colored e1, e2, e1, e2: the e1* word sees two opposite vertices
    g = FacetGraph.from_edges(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    c = toric.Coloring(2, [1, 2, 1, 2])
    assert toric.validate_coloring(g, c)[0]
    assert toric.first_betti(g, c) == 2


def test_orientability():
    assert toric.orientability_witness(toric.Coloring(2, [1, 2])) == 0b11
    # colors (1,0), (1,1), (0,1) on a path: valid, but w.(1,1) = w.(1,0) + w.(0,1) = 0
    g = FacetGraph.from_edges(range(3), [(0, 1), (1, 2)])
    c = toric.Coloring(2, [0b01, 0b11, 0b10])
    assert toric.validate_coloring(g, c)[0]
    assert toric.orientability_witness(c) is None


@given(colored_graphs())
def test_validation_monotone_in_clique_bound(gc):
    g, c = gc
    verdicts = [toric.validate_coloring(g, c, b)[0] for b in range(1, 6)]
    for b in range(len(verdicts)):
        if verdicts[b]:
            assert all(verdicts[:b])


@given(colored_graphs(), st.data())
def test_b1_invariant_under_left_equivalence(gc, data):
    g, c = gc
    M = data.draw(invertible(c.m))
    assert toric.first_betti(g, recolor(c, M)) == toric.first_betti(g, c)


@given(colored_graphs(), st.data())
def test_orientability_invariant_under_recoloring(gc, data):
    g, c = gc
    M = data.draw(invertible(c.m))
    assert (toric.orientability_witness(c) is None) == (toric.orientability_witness(recolor(c, M)) is None)


@given(st.integers(2, 7), st.integers(2, 4), st.data())
def test_connected_supports_give_zero(n, m, data):
    # every induced subgraph of a complete graph is connected
    g = FacetGraph.from_edges(range(n), combinations(range(n), 2))
    colors = data.draw(st.lists(st.integers(1, (1 << m) - 1), min_size=n, max_size=n))
    assert toric.first_betti(g, toric.Coloring(m, colors)) == 0


# -- on the Long graph -------------------------------------------------------


def test_basis_coloring(long_graph, good_sets):
    g, psi = long_graph
    c = toric.basis_coloring(g, good_sets[0], psi)
    assert c.m == 17
    counts = Counter(c.colors)
    assert len(counts) == 17 and set(counts.values()) == {16}
    assert gf2.rank(c.characteristic_matrix) == 17
    assert toric.validate_coloring(g, c)[0]
    assert toric.orientability_witness(c) is not None
    assert gf2.vec_mat((1 << 17) - 1, c.characteristic_matrix) == (1 << g.n) - 1
    # diagnostic: each coordinate word sees an independent 16-set
    contrib = toric.betti_contributions(g, c, toric.coordinate_words(c))
    assert [b for _, b in contrib] == [15] * 17


def test_bad_good_set_rejected(long_graph):
    g, psi = long_graph
    with pytest.raises(ValueError):
        toric.basis_coloring(g, list(range(16)), psi)


@pytest.mark.parametrize("k", [1, 3, 6])
def test_qr_coloring(long_graph, good_sets, k):
    g, psi = long_graph
    c = toric.qr_coloring(g, good_sets[1], psi, k)
    assert c.m == 9
    assert set(Counter(c.colors).values()) == {16}
    assert toric.validate_coloring(g, c)[0]
    w = toric.orientability_witness(c)
    assert gf2.vec_mat(w, c.characteristic_matrix) == (1 << g.n) - 1
    assert toric.quotient_compatibility(c, psi, codes.qr_tables().R)
    assert toric.first_betti(g, c) == 0
    assert toric.min_support(c) >= 80


def test_qr_parity_vector(long_graph, good_sets):
    g, psi = long_graph
    c = toric.qr_coloring(g, good_sets[0], psi, 1)
    w = gf2.pack([int(x) for x in codes.W_BITS])
    assert gf2.vec_mat(w, c.characteristic_matrix) == (1 << g.n) - 1


def test_qr_colorings_of_the_same_type_are_left_equivalent(long_graph, good_sets):
    g, psi = long_graph
    c2 = toric.qr_coloring(g, good_sets[2], psi, 2)
    c8 = toric.qr_coloring(g, good_sets[2], psi, 8)
    c3 = toric.qr_coloring(g, good_sets[2], psi, 3)
    assert gf2.left_equivalent(c2.characteristic_matrix, c8.characteristic_matrix)
    assert not gf2.left_equivalent(c2.characteristic_matrix, c3.characteristic_matrix)
    assert toric.first_betti(g, c2) == toric.first_betti(g, c8)


def test_quotient_compatibility_failures(long_graph, good_sets):
    g, psi = long_graph
    R = codes.qr_tables().R
    basis = toric.basis_coloring(g, good_sets[0], psi)
    assert not toric.quotient_compatibility(basis, psi, R)
    qr = toric.qr_coloring(g, good_sets[0], psi, 5)
    for i in range(9):
        for j in range(9):
            bad = BinaryMatrix(9, 9, tuple(r ^ (1 << j) if t == i else r for t, r in enumerate(R.data)))
            assert not toric.quotient_compatibility(qr, psi, bad)


def test_ledgers(long_graph, good_sets):
    g, psi = long_graph
    R = codes.qr_tables().R
    basis = toric.basis_coloring(g, good_sets[0], psi)
    qr = toric.qr_coloring(g, good_sets[0], psi, 1)
    assert toric.ledger(g, basis, with_volume=False).prisms == 513_382_809_600
    assert toric.ledger(g, qr, with_volume=False).prisms == 2_005_401_600
    L = toric.ledger(g, qr, quotient=17, psi=psi, R=R, with_volume=False)
    assert (L.prisms, L.copies_of_q, L.orientable) == (117_964_800, 8192, True)
    with pytest.raises(toric.IncompatibleQuotient):
        toric.ledger(g, basis, quotient=17, psi=psi, R=R, with_volume=False)
    with pytest.raises(toric.IncompatibleQuotient):
        toric.ledger(g, qr, quotient=17, with_volume=False)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 20))
def test_ledger_counts_are_exact(facets, block, m):
    c = toric.Coloring(m, [1])
    L = toric.ledger(None, c, facets, block, with_volume=False)
    assert L.prisms == (2**m) * facets * block
    assert L.copies_of_q * block == L.prisms


def test_f5_coloring(ctx):
    c = ctx.f5_coloring
    assert c.m == 9 and len(set(c.colors)) == 13
    assert toric.validate_coloring(ctx.f5_graph, c)[0]
    L = toric.ledger(ctx.f5_graph, c, with_volume=False)
    assert L.prisms == 4_792_320_000
