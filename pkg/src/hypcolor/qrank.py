"""Exact rank of integer matrices over the rationals.

Two routes: Bareiss fraction-free elimination (exact, for modest sizes), and
a modular route that pairs a rank computed mod a large prime (a lower bound
on the rational rank) with kernel vectors lifted by rational reconstruction
and verified in exact integer arithmetic (an upper bound).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

PRIMES = (2147483629, 2147483587, 2147483579)


class RankUndetermined(ArithmeticError):
    pass


def bareiss_rank(m) -> int:
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, cols):
                ai[j] = (pr[c] * ai[j] - f * pr[j]) // prev
            ai[c] = 0
        prev = pr[c]
        r += 1
        if r == rows:
            break
    return r


def rref_mod_p(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.flatnonzero(a[r:, c])
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if len(nzr):
            # (f * a[r]) can reach p^2 < 2^62, so reduce before subtracting
            a[nzr] = (a[nzr] - (col[nzr, None] * a[r][None, :]) % p) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank_mod_p(m: np.ndarray, p: int = PRIMES[0]) -> int:
    return len(rref_mod_p(m, p)[1])


def rational_reconstruct(a: int, p: int) -> Fraction | None:
    """Fraction n/d with |n|, d <= sqrt(p/2) and n = a d mod p, if one exists."""
    bound = isqrt(p // 2)
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def lifted_kernel(m: np.ndarray, p: int = PRIMES[0]) -> tuple[int, list[list[int]] | None]:
    """(rank mod p, integer kernel basis verified exactly or None)."""
    red, pivots = rref_mod_p(m, p)
    cols = red.shape[1]
    free = [j for j in range(cols) if j not in set(pivots)]
    exact = [[int(x) for x in row] for row in np.asarray(m)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            q = rational_reconstruct(-int(red[i, f]) % p, p)
            if q is None:
                return len(pivots), None
            vec[c] = q
        den = lcm(*(x.denominator for x in vec))
        ints = [int(x * den) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        if any(sum(r[j] * ints[j] for j in range(cols) if ints[j]) for r in exact):
            return len(pivots), None
        basis.append(ints)
    return len(pivots), basis


def rational_rank(m, max_bareiss: int = 120) -> int:
    """Exact rank over Q."""
    m = np.asarray(m, dtype=np.int64)
    if max(m.shape) <= max_bareiss:
        return bareiss_rank(m)
    for p in PRIMES:
        r, kernel = lifted_kernel(m, p)
        if kernel is not None:
            # the free-column pattern makes the lifted vectors independent
            return r
    raise RankUndetermined("modular lower bound could not be matched by verified kernel vectors")
