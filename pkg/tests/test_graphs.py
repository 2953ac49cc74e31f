import random
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypcolor import graphs
from hypcolor.graphs import FacetGraph, FreeCyclicAction


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return FacetGraph.from_edges(list(range(n)), chosen)


def brute_components(g, vs):
    vs = set(vs)
    seen, count = set(), 0
    for s in vs:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in vs:
                if w not in seen and (g.adj[u] >> w) & 1:
                    seen.add(w)
                    stack.append(w)
    return count


@given(small_graphs(), st.data())
def test_induced_components(g, data):
    vs = data.draw(st.sets(st.integers(0, g.n - 1)))
    mask = sum(1 << v for v in vs)
    assert g.induced_components(mask) == brute_components(g, vs)


@given(small_graphs(max_n=8))
def test_cliques_match_brute_force(g):
    found = set(graphs.cliques(g, 4))
    brute = {c for k in range(1, 5) for c in combinations(range(g.n), k) if g.is_clique(c)}
    assert found == brute


@given(small_graphs(max_n=10))
def test_perfect_matching_count(g):
    listed = list(graphs.perfect_matchings(g.adj))
    assert graphs.count_perfect_matchings(g.adj) == len(listed)
    for m in listed:
        assert sorted(v for e in m for v in e) == list(range(g.n))
        assert all((g.adj[u] >> v) & 1 for u, v in m)


def test_face_counts_of_a_tetrahedron():
    assert graphs.face_counts([(0, 1, 2, 3)]) == [4, 6, 4, 1]
    assert graphs.euler_characteristic([(0, 1, 2, 3)]) == 1
    # boundary of the tetrahedron is a 2-sphere
    assert graphs.euler_characteristic(combinations(range(4), 3)) == 2


def test_free_cyclic_action():
    psi = FreeCyclicAction((1, 2, 0, 4, 5, 3), 3)
    assert psi.is_free()
    assert psi.orbits() == [[0, 1, 2], [3, 4, 5]]
    assert psi.power(2) == (2, 0, 1, 5, 3, 4)
    assert not FreeCyclicAction((1, 0, 2), 2).is_free()


def test_good_sets_brute_force_on_a_cycle_product():
    # C6 with rotation by 2: two free orbits of size 3
    n = 6
    g = FacetGraph.from_edges(list(range(n)), [(i, (i + 1) % n) for i in range(n)])
    psi = FreeCyclicAction(tuple((i + 2) % n for i in range(n)), 3)
    orbits = psi.orbits()
    brute = [s for s in product(*orbits) if g.is_independent(s)]
    assert graphs.good_independent_sets(g, psi) == len(brute)
    streamed = sorted(graphs.good_independent_sets(g, psi, mode="stream"))
    assert streamed == sorted(tuple(sorted(s)) for s in brute)
    for s in graphs.good_independent_sets(g, psi, mode="sample", n=3, seed=1):
        assert graphs.is_good_set(g, psi, s)


@pytest.mark.parametrize("seed", range(6))
def test_good_set_count_on_random_graphs(seed):
    rng = random.Random(seed)
    k, order = 3, 4
    n = k * order
    rot = tuple((v // order) * order + (v % order + 1) % order for v in range(n))
    psi = FreeCyclicAction(rot, order)
    edges = set()
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.3:
            for t in range(order):
                a, b = psi.power(t)[u], psi.power(t)[v]
                if a != b:
                    edges.add((min(a, b), max(a, b)))
    g = FacetGraph.from_edges(list(range(n)), edges)
    brute = sum(1 for s in product(*psi.orbits()) if g.is_independent(s))
    assert graphs.good_independent_sets(g, psi) == brute


def test_annihilating_product_on_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    g = FacetGraph.from_edges(list(range(10)), outer + spokes + inner)
    adj = g.adjacency_matrix()
    assert graphs.annihilates(adj, [3, 1, -2])
    assert not graphs.annihilates(adj, [3, 1])
    rep = graphs.spectral_certificate(g, shift=2, partition=None)
    assert rep.spectrum_support == (-2, 1, 3)
    assert rep.support_verified
    assert rep.hoffman_bound is None  # 3 is not a multiple of 2
    assert rep.rank_plus_shift == 6  # multiplicity of -2 is 4


def test_long_graph(long_graph, ctx):
    g, psi = long_graph
    assert g.n == 272
    assert g.num_edges() == 8160
    assert set(g.degrees()) == {60}
    assert g.is_simple()
    assert psi.is_free() and len(psi.orbits()) == 16
    assert all(g.automorphism_ok(p) for p in g.action.values())
    assert g.automorphism_ok(psi.perm)


def test_both_omega_choices_give_the_same_profile(ctx):
    other, psi = graphs.build_long_graph(1, ctx.long)
    g, _ = ctx.long_graph
    assert (other.n, other.num_edges(), sorted(set(other.degrees()))) == (g.n, g.num_edges(), [60])
    assert len(psi.orbits()) == 16


def test_f5_graph(f5_graph):
    g = f5_graph
    assert g.n == 650
    assert set(g.degrees()) == {120}
    assert g.num_edges() == 39000
    assert all(g.automorphism_ok(p) for p in g.action.values())


def test_seed_clique(f5_graph):
    seed = graphs.real_seed_clique(f5_graph)
    assert len(set(seed)) == 5 and f5_graph.is_clique(seed)


def test_l_analysis(ctx):
    a = ctx.l_analysis
    assert a.order == 125
    assert a.orbit_sizes == [25] * 26
    assert a.all_independent
    assert a.pairings == 64
    parts = graphs.pairing_partition(a)
    assert len(parts) == 13 and sorted(v for p in parts for v in p) == list(range(650))
    assert all(ctx.f5_graph.is_independent(p) for p in parts)


def test_adjacency_matrix_roundtrip(long_graph):
    g, _ = long_graph
    a = g.adjacency_matrix()
    assert (a == a.T).all() and not np.diag(a).any()
    assert int(a.sum()) == 2 * g.num_edges()


def test_alternative_edge_seed_coincides():
    # e is an involution, so the seeds {w, w.e} and {w, w.e^-1} give one edge orbit
    data = graphs.long_data()
    e = data.group170.gens[4]
    assert all(e[e[i]] == i for i in range(len(e)))
