"""Permutation groups: deterministic Schreier-Sims, orbits and stabilizer orders.

Permutations are tuples of images on ``0..n-1`` and act on the right:
``(p * q)[i] = q[p[i]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

Perm = tuple[int, ...]

DEFAULT_ORBIT_CAP = 10**7


class OrbitTooLarge(RuntimeError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple([q[i] for i in p])


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    result = identity(len(p))
    if k < 0:
        p, k = inverse(p), -k
    while k:
        if k & 1:
            result = mul(result, p)
        p = mul(p, p)
        k >>= 1
    return result


def perm_order(p: Perm) -> int:
    from math import lcm

    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        out = lcm(out, length)
    return out


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


# -- actions on derived objects -------------------------------------------


def act_point(x: int, p: Perm) -> int:
    return p[x]


def act_set(s: tuple[int, ...], p: Perm) -> tuple[int, ...]:
    return tuple(sorted(p[x] for x in s))


def act_set_pair(pair: tuple[tuple[int, ...], tuple[int, ...]], p: Perm):
    a, b = act_set(pair[0], p), act_set(pair[1], p)
    return (a, b) if a <= b else (b, a)


def canonical_seed(seed):
    """Point stays a point; a set becomes a sorted tuple; a pair of sets is ordered."""
    if isinstance(seed, int):
        return seed, act_point
    seed = tuple(seed)
    if seed and not isinstance(seed[0], int):
        a, b = (tuple(sorted(s)) for s in seed)
        return ((a, b) if a <= b else (b, a)), act_set_pair
    return tuple(sorted(seed)), act_set


def orbit_bfs(
    seed: Hashable,
    gens: Sequence[Perm],
    act: Callable,
    cap: int = DEFAULT_ORBIT_CAP,
) -> list:
    out = [seed]
    seen = {seed}
    for x in out:
        for g in gens:
            y = act(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
                if len(out) > cap:
                    raise OrbitTooLarge(f"orbit exceeds {cap}")
    return out


# -- stabilizer chain -----------------------------------------------------


@dataclass
class _Level:
    base: int
    gens: list[Perm]
    # transversal[pt] = u with base^u = pt
    transversal: dict[int, Perm] = field(default_factory=dict)

    def rebuild(self, n: int) -> None:
        self.transversal = {self.base: identity(n)}
        queue = [self.base]
        for pt in queue:
            u = self.transversal[pt]
            for g in self.gens:
                q = g[pt]
                if q not in self.transversal:
                    self.transversal[q] = mul(u, g)
                    queue.append(q)


class PermutationGroup:
    def __init__(self, gens: Iterable[Sequence[int]], degree: int | None = None):
        gens = [tuple(g) for g in gens]
        if degree is None:
            degree = len(gens[0]) if gens else 0
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of the given degree")
        self.degree = degree
        self.gens = gens
        self._chain: list[_Level] | None = None

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, ngens={len(self.gens)})"

    # -- Schreier-Sims --------------------------------------------------

    def stabilizer_chain(self, base: Sequence[int] = ()) -> list[_Level]:
        if self._chain is not None and not base:
            return self._chain
        chain = _schreier_sims(self.gens, self.degree, list(base))
        if not base:
            self._chain = chain
        return chain

    def order(self, base: Sequence[int] = ()) -> int:
        out = 1
        for lev in self.stabilizer_chain(base):
            out *= len(lev.transversal)
        return out

    def base_orbit_lengths(self, base: Sequence[int] = ()) -> list[int]:
        return [len(lev.transversal) for lev in self.stabilizer_chain(base)]

    def contains(self, g: Sequence[int]) -> bool:
        h, level = _sift(tuple(g), self.stabilizer_chain())
        return level == len(self.stabilizer_chain()) and h == identity(self.degree)

    # -- orbits ---------------------------------------------------------

    def orbit(self, seed, cap: int = DEFAULT_ORBIT_CAP) -> list:
        seed, act = canonical_seed(seed)
        return orbit_bfs(seed, self.gens, act, cap)

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = sorted(self.orbit(x))
                seen.update(orb)
                out.append(orb)
        return out

    def stabilizer_order(self, seed) -> int:
        return self.order() // len(self.orbit(seed))

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree


def group_order(g: PermutationGroup) -> int:
    return g.order()


def _sift(g: Perm, chain: list[_Level]) -> tuple[Perm, int]:
    for i, lev in enumerate(chain):
        pt = g[lev.base]
        u = lev.transversal.get(pt)
        if u is None:
            return g, i
        g = mul(g, inverse(u))
    return g, len(chain)


def _schreier_sims(gens: list[Perm], n: int, base: list[int]) -> list[_Level]:
    ident = identity(n)
    gens = [g for g in gens if g != ident]
    chain: list[_Level] = []

    def moved_point(g: Perm) -> int:
        return next(i for i in range(n) if g[i] != i)

    # seed the base so that no generator fixes every base point
    for b in base:
        chain.append(_Level(b, []))
    for g in gens:
        if all(g[lev.base] == lev.base for lev in chain):
            chain.append(_Level(moved_point(g), []))
    for i, lev in enumerate(chain):
        lev.gens = [g for g in gens if all(g[chain[j].base] == chain[j].base for j in range(i))]
        lev.rebuild(n)

    i = len(chain) - 1
    while i >= 0:
        lev = chain[i]
        found = None
        for pt, u in list(lev.transversal.items()):
            for s in lev.gens:
                us = mul(u, s)
                h = mul(us, inverse(lev.transversal[s[pt]]))
                if h == ident:
                    continue
                residue, j = _sift(h, chain[i + 1 :])
                j += i + 1
                if residue != ident:
                    found = (residue, j)
                    break
            if found:
                break
        if found is None:
            i -= 1
            continue
        residue, j = found
        if j == len(chain):
            chain.append(_Level(moved_point(residue), []))
        for l in range(i + 1, j + 1):
            chain[l].gens.append(residue)
            chain[l].rebuild(n)
        i = j
    # drop trivial trailing levels introduced by the user base
    return [lev for lev in chain if len(lev.transversal) > 1 or lev.gens]
