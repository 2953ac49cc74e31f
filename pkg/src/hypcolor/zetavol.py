"""Dedekind zeta values of Q(sqrt 5) and Q(sqrt phi), and the prism volume.

zeta of Q(sqrt 5) factors as zeta(s) L(s, chi_5); both come from mpmath.
zeta of Q(sqrt phi) is an Euler product over the factorization pattern of
x^4 - x^2 - 1 mod p, with the two ramified primes handled through
Dedekind's criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

WORKING_DPS = 40
DEFAULT_CUTOFF = 10**6
MAX_AUTO_CUTOFF = 2**24

# x^4 - x^2 - 1, constant term first
QUARTIC = (-1, 0, -1, 0, 1)
QUARTIC_DISCRIMINANT = -400
CHI5 = (0, 1, -1, -1, 1)


class NonMaximalOrder(NotImplementedError):
    pass


@dataclass(frozen=True)
class ZetaValue:
    value: mpmath.mpf
    error_bound: mpmath.mpf

    def __post_init__(self):
        if not (self.error_bound > 0 and mpmath.isfinite(self.error_bound)):
            raise ValueError("error bound must be positive and finite")

    def __float__(self) -> float:
        return float(self.value)

    def __mul__(self, other: ZetaValue) -> ZetaValue:
        v = self.value * other.value
        e = abs(self.value) * other.error_bound + abs(other.value) * self.error_bound + self.error_bound * other.error_bound
        return ZetaValue(v, e)

    def __truediv__(self, other: ZetaValue) -> ZetaValue:
        if other.error_bound >= abs(other.value):
            raise ZeroDivisionError("denominator not bounded away from zero")
        v = self.value / other.value
        rel = self.error_bound / abs(self.value) + other.error_bound / (abs(other.value) - other.error_bound)
        return ZetaValue(v, abs(v) * rel + self.error_bound * other.error_bound)

    def scale(self, c) -> ZetaValue:
        c = mpmath.mpf(c)
        return ZetaValue(self.value * c, max(self.error_bound * abs(c), mpmath.mpf(10) ** (-WORKING_DPS)))

    def as_dict(self) -> dict:
        return {"value": mpmath.nstr(self.value, 25), "error_bound": mpmath.nstr(self.error_bound, 5)}


def _library_bound(x) -> mpmath.mpf:
    # mpmath evaluates to full working precision; leave a margin of 5 digits
    return abs(x) * mpmath.mpf(10) ** (5 - WORKING_DPS) + mpmath.mpf(10) ** (-WORKING_DPS)


def _check_s(s) -> None:
    if s <= 1:
        raise ValueError("s must exceed 1")


def riemann_zeta(s) -> ZetaValue:
    _check_s(s)
    with mpmath.workdps(WORKING_DPS):
        z = mpmath.zeta(s)
        return ZetaValue(+z, _library_bound(z))


def l_chi5(s) -> ZetaValue:
    _check_s(s)
    with mpmath.workdps(WORKING_DPS):
        z = mpmath.dirichlet(s, CHI5)
        return ZetaValue(+z, _library_bound(z))


def zeta_k0(s) -> ZetaValue:
    """zeta of Q(sqrt 5) at s > 1."""
    with mpmath.workdps(WORKING_DPS):
        return riemann_zeta(s) * l_chi5(s)


# -- polynomials over F_p (coefficient lists, constant term first) ------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod_p(a, p: int) -> list[int]:
    return _trim([c % p for c in a])


def poly_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_divmod(a, b, p: int) -> tuple[list[int], list[int]]:
    a = poly_mod_p(a, p)
    b = poly_mod_p(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def poly_gcd(a, b, p: int) -> list[int]:
    a, b = poly_mod_p(a, p), poly_mod_p(b, p)
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def poly_powmod(base, e: int, mod, p: int) -> list[int]:
    result = [1]
    base = poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, p), mod, p)[1]
        base = poly_divmod(poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def poly_sub(a, b, p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def poly_derivative(a, p: int) -> list[int]:
    return _trim([i * a[i] % p for i in range(1, len(a))])


def squarefree_decomposition(f, p: int) -> list[tuple[list[int], int]]:
    """Monic squarefree ``(g, e)`` pieces with ``f = lc * prod g^e`` over F_p."""
    f = poly_mod_p(f, p)
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    out: list[tuple[list[int], int]] = []

    def go(f, mult):
        if len(f) <= 1:
            return
        d = poly_derivative(f, p)
        if not d:
            # f is a polynomial in x^p; coefficients are their own p-th roots
            go(f[::p], mult * p)
            return
        c = poly_gcd(f, d, p)
        w = poly_divmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = poly_gcd(w, c, p)
            z = poly_divmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, i * mult))
            i += 1
            w = y
            c = poly_divmod(c, y, p)[0]
        if len(c) > 1:
            go(c[::p], mult * p)

    go(f, 1)
    return out


def distinct_degree(f, p: int) -> list[int]:
    """Degrees of the irreducible factors of a monic squarefree ``f`` over F_p."""
    degrees = []
    f = poly_mod_p(f, p)
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = poly_powmod(h, p, f, p)
        g = poly_gcd(f, poly_sub(h, [0, 1], p), p)
        if len(g) > 1:
            degrees += [d] * ((len(g) - 1) // d)
            f = poly_divmod(f, g, p)[0]
            h = poly_divmod(h, f, p)[1]
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def factor_pattern(f, p: int) -> list[tuple[int, int]]:
    """Sorted ``(degree, multiplicity)`` of the irreducible factors of ``f`` mod p."""
    pat = []
    for g, e in squarefree_decomposition(f, p):
        pat += [(d, e) for d in distinct_degree(g, p)]
    return sorted(pat)


def _radical_and_cofactor(f, p: int):
    g = [1]
    for piece, _ in squarefree_decomposition(f, p):
        g = poly_mul(g, piece, p)
    h = poly_divmod(f, g, p)[0]
    return g, h


def dedekind_maximal(f, p: int) -> bool:
    """Dedekind's criterion: is Z[x]/(f) maximal at p?"""
    g, h = _radical_and_cofactor(f, p)
    gh = [0] * (len(g) + len(h) - 1)
    for i, x in enumerate(g):
        for j, y in enumerate(h):
            gh[i + j] += x * y
    diff = [(gh[i] if i < len(gh) else 0) - (f[i] if i < len(f) else 0) for i in range(max(len(gh), len(f)))]
    if any(c % p for c in diff):
        raise AssertionError("lift does not reduce to f")
    F = poly_mod_p([c // p for c in diff], p)
    return len(poly_gcd(poly_gcd(F, g, p), h, p)) == 1


def residue_degrees(f, p: int, discriminant: int = QUARTIC_DISCRIMINANT) -> list[int]:
    """Residue degrees of the primes above p, one per prime ideal."""
    if discriminant % p == 0 and not dedekind_maximal(f, p):
        raise NonMaximalOrder(f"Z[theta] is not maximal at {p}; local factor unresolved")
    return [d for d, _ in factor_pattern(f, p)]


# -- fast splitting for x^4 - x^2 - 1 ------------------------------------------


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _sqrt_mod(a: int, p: int) -> int:
    """Tonelli-Shanks."""
    a %= p
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def quartic_degrees(p: int) -> list[int]:
    """Residue degrees above an unramified odd p, via x^2 = y with y^2 - y - 1 = 0."""
    if _legendre(5, p) == 1:
        r = _sqrt_mod(5, p)
        inv2 = (p + 1) // 2
        ys = [(1 + r) * inv2 % p, (1 - r) * inv2 % p]
        out = []
        for y in ys:
            out += [1, 1] if _legendre(y, p) == 1 else [2]
        return sorted(out)
    # y lies in F_{p^2} with norm -1, which is a square there iff -1 is a square mod p
    return [2, 2] if p % 4 == 1 else [4]


def primes_up_to(n: int) -> np.ndarray:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.nonzero(sieve)[0]


@lru_cache(maxsize=8)
def _zeta_l2_cached(s: int, cutoff: int) -> ZetaValue:
    with mpmath.workdps(WORKING_DPS):
        one = mpmath.mpf(1)
        log_sum = mpmath.mpf(0)
        for p in primes_up_to(cutoff).tolist():
            if QUARTIC_DISCRIMINANT % p == 0:
                degs = residue_degrees(QUARTIC, p)
            else:
                degs = quartic_degrees(p)
            for f in degs:
                log_sum -= mpmath.log1p(-mpmath.power(p, -f * s))
        value = mpmath.exp(log_sum)
        # primes beyond the cutoff: log of the missing factor is at most
        # sum_{p>N} 4 p^-s / (1 - p^-s) <= 4 (1 + N^-s) / ((s - 1) N^(s-1))
        n = mpmath.mpf(cutoff)
        tail = 4 * (1 + n ** (-s)) / ((s - 1) * n ** (s - 1))
        err = value * mpmath.expm1(tail) + _library_bound(value) * cutoff
        return ZetaValue(value, err)


def zeta_l2(s: int = 3, cutoff: int = DEFAULT_CUTOFF) -> ZetaValue:
    """zeta of Q(sqrt phi) at integer s > 1 by an Euler product over p <= cutoff."""
    _check_s(s)
    if int(s) != s:
        raise ValueError("only integer s is supported")
    return _zeta_l2_cached(int(s), int(cutoff))


def volume_prefactor() -> mpmath.mpf:
    with mpmath.workdps(WORKING_DPS):
        return 9 * mpmath.sqrt(5) ** 15 / (32 * mpmath.pi**15)


def vol_P(cutoff: int = DEFAULT_CUTOFF) -> ZetaValue:
    """Volume of the simplicial prism P."""
    with mpmath.workdps(WORKING_DPS):
        c = volume_prefactor()
        z = zeta_k0(2) * zeta_k0(4) * zeta_l2(3, cutoff) / zeta_k0(3)
        return z.scale(c)


def vol_of_prisms(n: int, cutoff: int = DEFAULT_CUTOFF) -> ZetaValue:
    if n < 0 or int(n) != n:
        raise ValueError("prism count must be a nonnegative integer")
    with mpmath.workdps(WORKING_DPS):
        return vol_P(cutoff).scale(int(n))
