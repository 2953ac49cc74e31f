"""The two facet-adjacency graphs and the analytics run on them.

Adjacency is stored as one int bitset per vertex.  Group actions on a graph
are lists of vertex permutations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from . import coxeter, cosets
from .permgroup import PermutationGroup, act_set, mul, orbit_bfs, perm_order, power

LONG_SUBGROUP = ("ac", "ae", "decd", "bacbab")  # S intersected with G+
LONG_S = ("a", "c", "e", "decd", "bacbab")
PSI_WORD = "abcde" * 2


class ConstructionMismatch(AssertionError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass
class FacetGraph:
    labels: list[tuple[int, ...]]
    adj: list[int]
    action: dict[str, tuple[int, ...]] = field(default_factory=dict)  # name -> vertex permutation

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_edges(cls, labels, edges, action=None) -> FacetGraph:
        adj = [0] * len(labels)
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(list(labels), adj, dict(action or {}))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def is_simple(self) -> bool:
        loops = any((a >> v) & 1 for v, a in enumerate(self.adj))
        symmetric = all((self.adj[v] >> u) & 1 for u in range(self.n) for v in bits(self.adj[u]))
        return not loops and symmetric

    def is_independent(self, vs: Sequence[int]) -> bool:
        mask = 0
        for v in vs:
            mask |= 1 << v
        return not any(self.adj[v] & mask for v in vs)

    def is_clique(self, vs: Sequence[int]) -> bool:
        return all((self.adj[u] >> v) & 1 for u, v in combinations(vs, 2))

    def induced_components(self, mask: int) -> int:
        """Number of connected components of the subgraph induced on ``mask``."""
        count = 0
        rest = mask
        while rest:
            frontier = rest & -rest
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & rest & ~comp
            rest &= ~comp
            count += 1
        return count

    def automorphism_ok(self, perm: Sequence[int]) -> bool:
        return all(
            (self.adj[perm[u]] >> perm[v]) & 1 for u in range(self.n) for v in bits(self.adj[u])
        )

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            m[u, v] = m[v, u] = 1
        return m


@dataclass(frozen=True)
class FreeCyclicAction:
    perm: tuple[int, ...]
    order: int

    def orbits(self) -> list[list[int]]:
        seen = set()
        out = []
        for v in range(len(self.perm)):
            if v in seen:
                continue
            orb = [v]
            x = self.perm[v]
            while x != v:
                orb.append(x)
                x = self.perm[x]
            seen.update(orb)
            out.append(orb)
        return out

    def is_free(self) -> bool:
        return all(len(o) == self.order for o in self.orbits()) and perm_order(self.perm) == self.order

    def power(self, k: int) -> tuple[int, ...]:
        return power(self.perm, k % self.order)


# -- the Long graph -------------------------------------------------------


@dataclass
class LongData:
    """Permutation-level data behind the Long graph."""

    table85: cosets.CosetTable
    table170: cosets.CosetTable
    group85: PermutationGroup
    group170: PermutationGroup
    sigma: PermutationGroup
    omega_candidates: list[tuple[int, ...]]


def long_data() -> LongData:
    pres = cosets.long_presentation()
    t85 = cosets.todd_coxeter(pres, LONG_S)
    t170 = cosets.todd_coxeter(pres, LONG_SUBGROUP)
    perms = t170.permutations()
    sigma = PermutationGroup(perms[:4])
    tens = [tuple(o) for o in sigma.orbits() if len(o) == 10]
    return LongData(
        table85=t85,
        table170=t170,
        group85=PermutationGroup(t85.permutations()),
        group170=PermutationGroup(perms),
        sigma=sigma,
        omega_candidates=sorted(tens),
    )


def word_perm(table: cosets.CosetTable, word: str) -> tuple[int, ...]:
    gens = dict(zip(table.presentation.generators, table.permutations()))
    out = tuple(range(table.index))
    for ch in word:
        out = mul(out, gens[ch])
    return out


def build_long_graph(omega_index: int = 0, data: LongData | None = None) -> tuple[FacetGraph, FreeCyclicAction]:
    """Vertices: the orbit of a 10-point Sigma-orbit under G/K+; edges: the orbit of {w, w.e}.

    The result is certified (vertex count, stabilizer order, loop-freeness,
    edge closure, freeness of psi) before it is returned.
    """
    data = data or long_data()
    g = data.group170
    omega = data.omega_candidates[omega_index]
    gens = g.gens
    e = gens[4]
    verts = sorted(g.orbit(omega))
    index = {v: i for i, v in enumerate(verts)}
    edge_orbit = g.orbit((omega, act_set(omega, e)))
    edges = [(index[a], index[b]) for a, b in edge_orbit]
    action = {
        name: tuple(index[act_set(v, p)] for v in verts)
        for name, p in zip("abcde", gens)
    }
    graph = FacetGraph.from_edges(verts, edges, action)
    psi170 = word_perm(data.table170, PSI_WORD)
    psi = FreeCyclicAction(tuple(index[act_set(v, psi170)] for v in verts), 17)

    checks = {
        "vertex count 272": len(verts) == 272,
        "stabilizer order 7200": g.order() // len(verts) == 7200,
        "sigma fixes omega": all(act_set(omega, s) == omega for s in data.sigma.gens),
        "loop-free": all(a != b for a, b in edges),
        "simple": graph.is_simple(),
        "edges closed under generators": all(graph.automorphism_ok(p) for p in action.values()),
        "psi free with 16 orbits of 17": psi.is_free() and len(psi.orbits()) == 16,
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise ConstructionMismatch(f"Long graph failed: {', '.join(failed)}")
    return graph, psi


# -- the GF(5) graph ------------------------------------------------------


def f5_vertices(form: np.ndarray, value: int = 3) -> np.ndarray:
    allv = np.array(list(product(range(5), repeat=5)), dtype=np.int64)
    norms = np.einsum("ij,jk,ik->i", allv, form, allv) % 5
    return allv[norms == value]


def build_f5_graph(form: np.ndarray | None = None, gens: Sequence[np.ndarray] | None = None) -> FacetGraph:
    """Vectors with K(v,v) = 3, adjacent when K(v,w) = 1; carries the Q action."""
    form = coxeter.reference_form() if form is None else form
    gens = coxeter.reference_generators() if gens is None else gens
    verts = f5_vertices(form)
    gram = verts @ form @ verts.T % 5
    adj = []
    for row in gram == 1:
        mask = 0
        for v in np.nonzero(row)[0]:
            mask |= 1 << int(v)
        adj.append(mask)
    labels = [tuple(int(x) for x in v) for v in verts]
    index = {v: i for i, v in enumerate(labels)}
    action = {}
    for name, g in zip(("alpha", "beta", "gamma", "delta", "epsilon"), gens):
        images = (verts @ g.T) % 5  # row v -> g v
        action[name] = tuple(index[tuple(int(x) for x in w)] for w in images)
    return FacetGraph(labels, adj, action)


# -- good independent sets -------------------------------------------------


class _GoodSetSearch:
    def __init__(self, g: FacetGraph, psi: FreeCyclicAction):
        if not psi.is_free():
            raise ValueError("psi must act freely with uniform orbit size")
        self.g = g
        self.psi = psi
        self.orbit_list = psi.orbits()
        self.orbit_mask = [sum(1 << v for v in o) for o in self.orbit_list]
        self.full = (1 << g.n) - 1

    def _pick(self, cand: int, remaining: Sequence[int]) -> tuple[int, int]:
        best, best_count = -1, 1 << 30
        for o in remaining:
            k = popcount(cand & self.orbit_mask[o])
            if k < best_count:
                best, best_count = o, k
                if k == 0:
                    break
        return best, best_count

    def count_from(self, cand: int, remaining: list[int]) -> int:
        best, k = self._pick(cand, remaining)
        if k == 0:
            return 0
        if len(remaining) == 1:
            return k
        rest = [o for o in remaining if o != best]
        total = 0
        om = self.orbit_mask[best]
        adj = self.g.adj
        for v in bits(cand & om):
            total += self.count_from(cand & ~adj[v] & ~om, rest)
        return total

    def count(self) -> int:
        # psi permutes good sets freely and is transitive on each orbit, so
        # count the sets through one vertex of orbit 0 and multiply
        v0 = self.orbit_list[0][0]
        rest = list(range(1, len(self.orbit_list)))
        sub = self.count_from(self.full & ~self.g.adj[v0] & ~self.orbit_mask[0], rest)
        return sub * self.psi.order

    def stream_from(self, cand: int, remaining: list[int], chosen: list[int]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(sorted(chosen))
            return
        best, k = self._pick(cand, remaining)
        if k == 0:
            return
        rest = [o for o in remaining if o != best]
        om = self.orbit_mask[best]
        for v in bits(cand & om):
            chosen.append(v)
            yield from self.stream_from(cand & ~self.g.adj[v] & ~om, rest, chosen)
            chosen.pop()

    def stream(self) -> Iterator[tuple[int, ...]]:
        return self.stream_from(self.full, list(range(len(self.orbit_list))), [])

    def random_set(self, rng: random.Random) -> tuple[int, ...] | None:
        def go(cand, remaining, chosen):
            if not remaining:
                return tuple(sorted(chosen))
            best, k = self._pick(cand, remaining)
            if k == 0:
                return None
            rest = [o for o in remaining if o != best]
            om = self.orbit_mask[best]
            options = list(bits(cand & om))
            rng.shuffle(options)
            for v in options:
                chosen.append(v)
                hit = go(cand & ~self.g.adj[v] & ~om, rest, chosen)
                if hit is not None:
                    return hit
                chosen.pop()
            return None

        return go(self.full, list(range(len(self.orbit_list))), [])

    def sample(self, n: int, seed: int) -> list[tuple[int, ...]]:
        rng = random.Random(seed)
        out: list[tuple[int, ...]] = []
        seen = set()
        attempts = 0
        while len(out) < n and attempts < 20 * n + 100:
            attempts += 1
            s = self.random_set(rng)
            if s is None:
                break
            if s not in seen:
                seen.add(s)
                out.append(s)
        return out


def good_independent_sets(g: FacetGraph, psi: FreeCyclicAction, mode: str = "count", n: int = 0, seed: int = 0):
    """``mode`` is 'count' (an int), 'stream' (an iterator) or 'sample' (a list)."""
    search = _GoodSetSearch(g, psi)
    if mode == "count":
        return search.count()
    if mode == "stream":
        return search.stream()
    if mode == "sample":
        return search.sample(n, seed)
    raise ValueError(f"unknown mode {mode!r}")


def is_good_set(g: FacetGraph, psi: FreeCyclicAction, s: Sequence[int]) -> bool:
    orbit_of = {v: i for i, o in enumerate(psi.orbits()) for v in o}
    hit = sorted(orbit_of[v] for v in s)
    return hit == list(range(len(psi.orbits()))) and g.is_independent(s)


# -- cliques --------------------------------------------------------------


def cliques(g: FacetGraph, max_size: int) -> Iterator[tuple[int, ...]]:
    """All cliques of size 1..max_size, each once, as increasing tuples."""

    def extend(clique, cand):
        yield clique
        if len(clique) == max_size:
            return
        for v in bits(cand):
            yield from extend(clique + (v,), cand & g.adj[v] & ~((2 << v) - 1))

    for v in range(g.n):
        yield from extend((v,), g.adj[v] & ~((2 << v) - 1))


def cliques_of_size(g: FacetGraph, k: int) -> list[tuple[int, ...]]:
    return [c for c in cliques(g, k) if len(c) == k]


@dataclass
class CliqueCensus:
    total: int
    orbit_sizes: list[int]
    real_orbit: set[tuple[int, ...]]
    seed: tuple[int, ...]


def real_seed_clique(g: FacetGraph) -> tuple[int, ...]:
    """{v0, e v0, d e v0, c d e v0, b c d e v0} in vertex indices."""
    index = {v: i for i, v in enumerate(g.labels)}
    v = index[coxeter.V0]
    out = [v]
    for name in ("epsilon", "delta", "gamma", "beta"):
        v = g.action[name][v]
        out.append(v)
    return tuple(out)


def five_clique_census(g: FacetGraph) -> CliqueCensus:
    five = cliques_of_size(g, 5)
    remaining = set(five)
    perms = list(g.action.values())
    act = lambda c, p: tuple(sorted(p[v] for v in c))
    orbits = []
    while remaining:
        start = min(remaining)
        orb = orbit_bfs(start, perms, act)
        remaining.difference_update(orb)
        orbits.append(orb)
    seed = real_seed_clique(g)
    if not g.is_clique(seed) or len(set(seed)) != 5:
        raise ConstructionMismatch("seed is not a 5-clique")
    key = tuple(sorted(seed))
    real = next(set(o) for o in orbits if key in set(o))
    return CliqueCensus(len(five), sorted(len(o) for o in orbits), real, seed)


def face_counts(top_simplices) -> list[int]:
    faces: list[set] = []
    for s in top_simplices:
        s = tuple(sorted(s))
        for k in range(1, len(s) + 1):
            while len(faces) < k:
                faces.append(set())
            faces[k - 1].update(combinations(s, k))
    return [len(f) for f in faces]


def euler_characteristic(top_simplices) -> int:
    return sum((-1) ** k * c for k, c in enumerate(face_counts(top_simplices)))


# -- the order-125 subgroup L ---------------------------------------------

L_GENERATORS = (
    ((0, 3, 2, 0, 2), (4, 0, 1, 4, 2), (1, 1, 0, 1, 3), (4, 2, 3, 2, 2), (4, 3, 2, 0, 3)),
    ((1, 2, 0, 2, 1), (3, 2, 2, 1, 3), (0, 3, 1, 3, 4), (3, 1, 2, 2, 3), (3, 1, 2, 1, 4)),
)


@dataclass
class LAnalysis:
    order: int
    orbits: list[list[int]]
    orbit_sizes: list[int]
    all_independent: bool
    compatibility: list[int]  # bitsets over orbit indices
    pairings: int
    in_q: bool

    def first_pairing(self) -> list[tuple[int, int]]:
        return next(perfect_matchings(self.compatibility))


def perfect_matchings(adj: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    n = len(adj)

    def go(rest: int):
        if not rest:
            yield []
            return
        u = (rest & -rest).bit_length() - 1
        for v in bits(adj[u] & rest & ~(1 << u)):
            for m in go(rest & ~(1 << u) & ~(1 << v)):
                yield [(u, v)] + m

    return go((1 << n) - 1)


def count_perfect_matchings(adj: Sequence[int]) -> int:
    adj = tuple(adj)

    @lru_cache(maxsize=None)
    def go(rest: int) -> int:
        if not rest:
            return 1
        # split into connected components; matchings multiply across them
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        if comp != rest:
            return go(comp) * go(rest & ~comp)
        if popcount(rest) & 1:
            return 0
        u = (rest & -rest).bit_length() - 1
        return sum(go(rest & ~(1 << u) & ~(1 << v)) for v in bits(adj[u] & rest & ~(1 << u)))

    return go((1 << len(adj)) - 1)


def l_subgroup_analysis(g: FacetGraph, q_group: coxeter.MatrixGroup | None = None) -> LAnalysis:
    mats = [coxeter.fp_matrix(m) for m in L_GENERATORS]
    lgroup = coxeter.MatrixGroup(mats)
    index = {v: i for i, v in enumerate(g.labels)}
    verts = np.array(g.labels, dtype=np.int64)
    perms = []
    for m in mats:
        images = verts @ m.T % 5
        perms.append(tuple(index[tuple(int(x) for x in w)] for w in images))
    seen: set[int] = set()
    orbits = []
    for v in range(g.n):
        if v not in seen:
            orb = sorted(orbit_bfs(v, perms, lambda x, p: p[x]))
            seen.update(orb)
            orbits.append(orb)
    masks = [sum(1 << v for v in o) for o in orbits]
    indep = all(g.is_independent(o) for o in orbits)
    compat = [0] * len(orbits)
    for i, j in combinations(range(len(orbits)), 2):
        if not any(g.adj[v] & masks[j] for v in orbits[i]):
            compat[i] |= 1 << j
            compat[j] |= 1 << i
    in_q = True
    if q_group is not None:
        in_q = all(m in q_group for m in mats)
    return LAnalysis(
        order=lgroup.order(),
        orbits=orbits,
        orbit_sizes=sorted(len(o) for o in orbits),
        all_independent=indep,
        compatibility=compat,
        pairings=count_perfect_matchings(compat),
        in_q=in_q,
    )


def pairing_partition(analysis: LAnalysis, pairing: list[tuple[int, int]] | None = None) -> list[list[int]]:
    pairing = pairing or analysis.first_pairing()
    return [sorted(analysis.orbits[i] + analysis.orbits[j]) for i, j in pairing]


# -- spectral certificate -------------------------------------------------

# primes below 1.1e8 keep every int64 dot product of length <= 650 exact mod p
_CRT_PRIMES = (99999989, 99999971, 99999959, 99999941, 99999931, 99999847)


def annihilates(adj: np.ndarray, roots: Sequence[int]) -> bool:
    """Exact test that prod (A - s I) = 0 over the integers.

    Entries of the product are bounded by ``n^(k-1) * m^k`` with ``m`` the
    largest shifted row sum; vanishing modulo enough primes to exceed twice
    that bound forces the integer product to vanish.
    """
    n = adj.shape[0]
    k = len(roots)
    row = int(np.abs(adj).sum(axis=1).max())
    m = row + max(abs(int(s)) for s in roots)
    bound = n ** (k - 1) * m**k
    modulus = 1
    for p in _CRT_PRIMES:
        if modulus > 2 * bound:
            break
        if n * p * p >= 2**63:
            raise ValueError("matrix too large for the int64 modular check")
        acc = np.eye(n, dtype=np.int64)
        for s in roots:
            shifted = (adj - int(s) * np.eye(n, dtype=np.int64)) % p
            acc = acc @ shifted % p
        if acc.any():
            return False
        modulus *= p
    if modulus <= 2 * bound:
        raise ValueError("not enough primes for the CRT bound")
    return True


@dataclass
class SpectralReport:
    n: int
    degree: int
    spectrum_support: tuple[int, ...]  # verified superset of the eigenvalues
    support_verified: bool
    shift: int
    kernel_vector_verified: bool
    rank_plus_shift: int | None
    hoffman_bound: int | None
    coloring_size: int | None
    coloring_proper: bool | None

    @property
    def shift_is_eigenvalue(self) -> bool:
        return self.kernel_vector_verified or (
            self.rank_plus_shift is not None and self.rank_plus_shift < self.n
        )

    @property
    def chromatic_number(self) -> int | None:
        if (
            self.hoffman_bound is not None
            and self.coloring_proper
            and self.coloring_size == self.hoffman_bound
        ):
            return self.hoffman_bound
        return None


def spectral_certificate(
    g: FacetGraph,
    shift: int = 10,
    partition: Sequence[Sequence[int]] | None = None,
    exact_rank: bool = True,
) -> SpectralReport:
    """Certify -shift as the least eigenvalue and compare Hoffman's bound with a coloring.

    The candidate spectrum comes from a floating-point eigensolver, rounded
    to integers; :func:`annihilates` then proves every eigenvalue lies in it.
    """
    from . import qrank

    deg = g.degrees()
    if len(set(deg)) != 1:
        raise ValueError("graph is not regular")
    k = deg[0]
    adj = g.adjacency_matrix()
    shifted = adj + shift * np.eye(g.n, dtype=np.int64)

    approx = np.linalg.eigvalsh(adj.astype(float))
    support = tuple(sorted({int(round(x)) for x in approx}))
    verified = bool(np.allclose(approx, np.round(approx), atol=1e-6)) and annihilates(adj, support)

    kernel_ok = False
    if partition:
        # a Hoffman-tight independent set S gives (n/|S|) 1_S - 1 in the kernel
        part = partition[0]
        if g.n % len(part) == 0:
            x = -np.ones(g.n, dtype=np.int64)
            x[list(part)] += g.n // len(part)
            kernel_ok = bool(x.any()) and not (shifted @ x).any()
    rank = qrank.rational_rank(shifted) if exact_rank else None

    hoffman = None
    if verified and min(support) == -shift and k % shift == 0:
        hoffman = 1 + k // shift
    proper = None
    if partition is not None:
        covered = sorted(v for part in partition for v in part)
        proper = covered == list(range(g.n)) and all(g.is_independent(p) for p in partition)
    return SpectralReport(
        n=g.n,
        degree=k,
        spectrum_support=support,
        support_verified=verified,
        shift=shift,
        kernel_vector_verified=kernel_ok,
        rank_plus_shift=rank,
        hoffman_bound=hoffman,
        coloring_size=len(partition) if partition is not None else None,
        coloring_proper=proper,
    )
