"""Coxeter diagrams, the golden-ratio reflection representation and its
reduction to GF(5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

INF = float("inf")
SIGNATURE_TOL = 1e-9


class UnsupportedLabel(ValueError):
    pass


class IndeterminateSignature(ArithmeticError):
    pass


class ClosureTooLarge(RuntimeError):
    pass


# -- diagrams -------------------------------------------------------------


@dataclass(frozen=True)
class CoxeterDiagram:
    n: int
    labels: tuple[tuple[float, ...], ...]  # symmetric, diagonal 1, absent edge = 2

    def __post_init__(self):
        for i in range(self.n):
            if self.labels[i][i] != 1:
                raise ValueError("diagonal labels must be 1")
            for j in range(self.n):
                if self.labels[i][j] != self.labels[j][i]:
                    raise ValueError("label matrix is not symmetric")
                if i != j and self.labels[i][j] not in (2, 3, 4, 5, INF):
                    raise ValueError(f"label {self.labels[i][j]} not in {{2,3,4,5,inf}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, float]]) -> CoxeterDiagram:
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i, j, lab in edges:
            m[i][j] = m[j][i] = lab
        return cls(n, tuple(tuple(r) for r in m))

    def label(self, i: int, j: int) -> float:
        return self.labels[i][j]


def linear_diagram(labels: Sequence[float]) -> CoxeterDiagram:
    """String diagram with consecutive labels, e.g. [5,3,3,3]."""
    return CoxeterDiagram.from_edges(len(labels) + 1, [(i, i + 1, m) for i, m in enumerate(labels)])


def diagram_G() -> CoxeterDiagram:
    """[5,3,3,3]: the 120-cell honeycomb group on a..e."""
    return linear_diagram([5, 3, 3, 3])


def diagram_sigma() -> CoxeterDiagram:
    """[5,3,3] = H4, the 120-cell symmetry group on a..d."""
    return linear_diagram([5, 3, 3])


def diagram_gamma() -> CoxeterDiagram:
    """The prism group on a..g; the dashed f-g edge is modelled as label inf."""
    return linear_diagram([5, 3, 3, 3, 4, INF])


# -- golden integers ------------------------------------------------------


@dataclass(frozen=True)
class GoldenInt:
    """``a + b*phi`` with ``phi^2 = phi + 1``."""

    a: int = 0
    b: int = 0

    def __add__(self, o: GoldenInt | int) -> GoldenInt:
        o = _golden(o)
        return GoldenInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, o: GoldenInt | int) -> GoldenInt:
        return self + (-_golden(o))

    def __rsub__(self, o: GoldenInt | int) -> GoldenInt:
        return _golden(o) - self

    def __mul__(self, o: GoldenInt | int) -> GoldenInt:
        o = _golden(o)
        bd = self.b * o.b
        return GoldenInt(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.a + self.b * (1 + math.sqrt(5)) / 2

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"


PHI = GoldenInt(0, 1)
G0 = GoldenInt(0, 0)
G1 = GoldenInt(1, 0)


def _golden(x: GoldenInt | int) -> GoldenInt:
    return x if isinstance(x, GoldenInt) else GoldenInt(int(x), 0)


GMatrix = list[list[GoldenInt]]


def gmat_mul(x: GMatrix, y: GMatrix) -> GMatrix:
    n, m, k = len(x), len(y[0]), len(y)
    return [[sum((x[i][t] * y[t][j] for t in range(k)), G0) for j in range(m)] for i in range(n)]


def gmat_transpose(x: GMatrix) -> GMatrix:
    return [list(r) for r in zip(*x)]


def gmat_identity(n: int) -> GMatrix:
    return [[G1 if i == j else G0 for j in range(n)] for i in range(n)]


# -- bilinear form and reflections ----------------------------------------

# 2 * (-cos(pi/m)) in Z[phi]
_TWICE_FORM_ENTRY = {2: G0, 3: GoldenInt(-1, 0), 5: GoldenInt(0, -1)}


def bilinear_form(d: CoxeterDiagram) -> GMatrix:
    """The form scaled by two: diagonal 2, and 0, -1, -phi for labels 2, 3, 5."""
    out = gmat_identity(d.n)
    for i in range(d.n):
        out[i][i] = GoldenInt(2, 0)
        for j in range(d.n):
            if i != j:
                m = d.label(i, j)
                if m not in _TWICE_FORM_ENTRY:
                    raise UnsupportedLabel(f"label {m} has no exact value in Z[phi]")
                out[i][j] = _TWICE_FORM_ENTRY[m]
    return out


def real_form(d: CoxeterDiagram) -> np.ndarray:
    """``B_ij = -cos(pi/m_ij)`` with ``pi/inf = 0``."""
    out = np.eye(d.n)
    for i, j in combinations(range(d.n), 2):
        m = d.label(i, j)
        out[i, j] = out[j, i] = -1.0 if m == INF else -math.cos(math.pi / m)
    return out


def signature(d: CoxeterDiagram, tol: float = SIGNATURE_TOL) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of the real form.

    Eigenvalues within ``tol`` of zero are accepted as zero only if they are
    below ``tol / 1000``; anything in between is ambiguous.
    """
    ev = np.linalg.eigvalsh(real_form(d))
    pos = neg = zero = 0
    for x in ev:
        if x > tol:
            pos += 1
        elif x < -tol:
            neg += 1
        elif abs(x) < tol * 1e-3:
            zero += 1
        else:
            raise IndeterminateSignature(f"eigenvalue {x:.3e} too close to zero to classify")
    return pos, neg, zero


def reflection_generators(d: CoxeterDiagram) -> list[GMatrix]:
    """``g_i(x) = x - 2B(x, e_i) e_i`` as matrices acting on column vectors."""
    form = bilinear_form(d)
    gens = []
    for i in range(d.n):
        g = gmat_identity(d.n)
        g[i] = [g[i][j] - form[i][j] for j in range(d.n)]
        gens.append(g)
    return gens


def gmatrix_order(g: GMatrix, max_order: int = 120) -> int:
    ident = gmat_identity(len(g))
    cur = g
    for k in range(1, max_order + 1):
        if cur == ident:
            return k
        cur = gmat_mul(cur, g)
    raise ValueError(f"order exceeds {max_order}")


def preserves_form(g: GMatrix, form: GMatrix) -> bool:
    return gmat_mul(gmat_mul(gmat_transpose(g), form), g) == form


# -- reduction to GF(5) ---------------------------------------------------

P = 5
PHI_MOD_5 = 3  # phi - 3 generates the prime over 5


def reduce_golden(x: GoldenInt) -> int:
    return (x.a + PHI_MOD_5 * x.b) % P


def reduce_mod_phi_minus_3(m: GMatrix) -> np.ndarray:
    return np.array([[reduce_golden(x) for x in row] for row in m], dtype=np.int64)


def fp_matrix(rows, p: int = P) -> np.ndarray:
    return np.asarray(rows, dtype=np.int64) % p


def fp_rref(m: np.ndarray, p: int = P) -> tuple[np.ndarray, list[int]]:
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def fp_nullspace(m: np.ndarray, p: int = P) -> np.ndarray:
    """Rows form a basis of the right kernel of ``m`` over GF(p)."""
    red, pivots = fp_rref(m, p)
    cols = red.shape[1]
    free = [j for j in range(cols) if j not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, c in enumerate(pivots):
            out[t, c] = (-red[i, f]) % p
    return out


def fp_inverse(m: np.ndarray, p: int = P) -> np.ndarray:
    n = m.shape[0]
    red, pivots = fp_rref(np.hstack([m % p, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return red[:, n:]


def fp_det(m: np.ndarray, p: int = P) -> int:
    a = np.array(m, dtype=np.int64) % p
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if len(nz) == 0:
            return 0
        k = c + nz[0]
        if k != c:
            a[[c, k]] = a[[k, c]]
            det = -det
        det = det * int(a[c, c]) % p
        inv = pow(int(a[c, c]), -1, p)
        for i in range(c + 1, n):
            if a[i, c]:
                a[i] = (a[i] - a[i, c] * inv * a[c]) % p
    return det % p


def is_square_mod(x: int, p: int = P) -> bool:
    x %= p
    return x == 0 or pow(x, (p - 1) // 2, p) == 1


def diagonalize_form(form: np.ndarray, p: int = P, nonsquare: int | None = None) -> np.ndarray:
    """Change of basis ``C`` (columns = new basis) with ``C^T form C = diag(1,..,1,d)``.

    ``d`` is 1 or ``nonsquare`` (default: the smallest non-square).
    Deterministic: a Gram-Schmidt sweep over the standard basis, then pairing
    of non-square entries.
    """
    form = np.array(form, dtype=np.int64) % p
    n = form.shape[0]

    def q(u, v):
        return int(u @ form @ v) % p

    basis = [np.eye(n, dtype=np.int64)[i] for i in range(n)]
    ortho: list[np.ndarray] = []
    pool = basis[:]
    while pool:
        # pick the first vector (or sum of two) with nonzero norm
        pick = next((v for v in pool if q(v, v)), None)
        if pick is None:
            pair = next(
                ((u, v) for u, v in combinations(pool, 2) if q(u + v, u + v)), None
            )
            if pair is None:
                raise ValueError("degenerate form")
            pick = (pair[0] + pair[1]) % p
            pool.remove(next(x for x in pool if x is pair[0]))
        else:
            pool = [x for x in pool if x is not pick]
        ortho.append(pick)
        nn = q(pick, pick)
        inv = pow(nn, -1, p)
        pool = [(x - q(x, pick) * inv * pick) % p for x in pool]
        pool = [x for x in pool if x.any()]

    # scale to 1 or the least non-square
    nonsq = nonsquare if nonsquare is not None else next(x for x in range(2, p) if not is_square_mod(x, p))
    if is_square_mod(nonsq, p):
        raise ValueError(f"{nonsq} is a square mod {p}")
    scaled = []
    for v in ortho:
        nv = q(v, v)
        target = 1 if is_square_mod(nv, p) else nonsq
        s = next(s for s in range(1, p) if s * s * nv % p == target)
        scaled.append(v * s % p)
    ones = [v for v in scaled if q(v, v) == 1]
    bad = [v for v in scaled if q(v, v) != 1]
    while len(bad) >= 2:
        u, v = bad.pop(), bad.pop()
        # in span(u, v) find x with q(x,x) = 1, then its orthogonal complement
        x = next(
            (a * u + b * v) % p
            for a, b in product(range(p), repeat=2)
            if q((a * u + b * v) % p, (a * u + b * v) % p) == 1
        )
        y = next(
            (a * u + b * v) % p
            for a, b in product(range(p), repeat=2)
            if (a or b) and q(x, (a * u + b * v) % p) == 0
        )
        ny = q(y, y)
        s = next(s for s in range(1, p) if s * s * ny % p == 1)
        ones.extend([x, y * s % p])
    cols = ones + bad
    return np.array(cols, dtype=np.int64).T % p


def conjugate_generators(gens: Sequence[np.ndarray], change: np.ndarray, p: int = P) -> list[np.ndarray]:
    """Express each generator in the basis given by the columns of ``change``."""
    inv = fp_inverse(change, p)
    return [inv @ g @ change % p for g in gens]


def intertwiner(src: Sequence[np.ndarray], dst: Sequence[np.ndarray], p: int = P) -> np.ndarray | None:
    """An invertible ``X`` with ``X src_i = dst_i X`` for all i, or None."""
    n = src[0].shape[0]
    rows = []
    for g, h in zip(src, dst):
        for a in range(n):
            for b in range(n):
                r = np.zeros(n * n, dtype=np.int64)
                for c in range(n):
                    r[a * n + c] += g[c, b]
                    r[c * n + b] -= h[a, c]
                rows.append(r % p)
    ker = fp_nullspace(np.array(rows), p)
    for coeffs in product(range(p), repeat=len(ker)):
        if not any(coeffs):
            continue
        x = (np.array(coeffs, dtype=np.int64) @ ker) % p
        x = x.reshape(n, n)
        if fp_det(x, p):
            return x
    return None


# -- matrix group closure -------------------------------------------------


class MatrixGroup:
    """Finite matrix group over GF(p), enumerated breadth-first.

    Elements are encoded as base-p integers over their entries.  Because the
    generating set is closed under inverses, each BFS layer only needs to be
    compared with the previous two layers.
    """

    def __init__(self, gens: Sequence[np.ndarray], p: int = P, max_size: int = 10**8):
        self.p = p
        self.n = gens[0].shape[0]
        self.gens = [np.asarray(g, dtype=np.int64) % p for g in gens]
        gset = {self.encode_one(g) for g in self.gens}
        for g in list(self.gens):
            gi = fp_inverse(g, p)
            if self.encode_one(gi) not in gset:
                self.gens.append(gi)
                gset.add(self.encode_one(gi))
        self.max_size = max_size
        self._weights = np.array([p**k for k in range(self.n * self.n)], dtype=np.int64)
        self._keys: np.ndarray | None = None

    def encode_one(self, m: np.ndarray) -> int:
        return int(sum(int(x) * self.p**k for k, x in enumerate(np.asarray(m).ravel())))

    def encode(self, mats: np.ndarray) -> np.ndarray:
        return mats.reshape(len(mats), -1) @ self._weights

    def decode(self, keys: np.ndarray) -> np.ndarray:
        out = np.empty((len(keys), self.n * self.n), dtype=np.int64)
        k = keys.copy()
        for t in range(self.n * self.n):
            out[:, t] = k % self.p
            k //= self.p
        return out.reshape(len(keys), self.n, self.n)

    def _closure(self) -> np.ndarray:
        ident = np.eye(self.n, dtype=np.int64)[None]
        prev = np.empty(0, dtype=np.int64)
        layer = self.encode(ident)
        layers = [layer]
        total = 1
        while len(layer):
            mats = self.decode(layer)
            cand = np.unique(
                np.concatenate([self.encode(mats @ g % self.p) for g in self.gens])
            )
            fresh = cand[~np.isin(cand, layer, assume_unique=True)]
            fresh = fresh[~np.isin(fresh, prev, assume_unique=True)]
            total += len(fresh)
            if total > self.max_size:
                raise ClosureTooLarge(f"group exceeds {self.max_size} elements")
            prev, layer = layer, fresh
            layers.append(layer)
        return np.sort(np.concatenate(layers))

    @property
    def keys(self) -> np.ndarray:
        if self._keys is None:
            self._keys = self._closure()
        return self._keys

    def order(self) -> int:
        return len(self.keys)

    def __contains__(self, m: np.ndarray) -> bool:
        k = self.encode_one(np.asarray(m) % self.p)
        i = np.searchsorted(self.keys, k)
        return i < len(self.keys) and self.keys[i] == k

    def elements(self) -> np.ndarray:
        return self.decode(self.keys)

    def orbit(self, v: Sequence[int]) -> list[tuple[int, ...]]:
        """Orbit of a column vector under ``v -> g v``, breadth-first."""
        start = tuple(int(x) % self.p for x in v)
        out = [start]
        seen = {start}
        for x in out:
            xv = np.array(x, dtype=np.int64)
            for g in self.gens:
                y = tuple(int(t) for t in g @ xv % self.p)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
        return out

    def stabilizer_order(self, v: Sequence[int]) -> int:
        return self.order() // len(self.orbit(v))


def matrix_group_closure(gens: Sequence[np.ndarray], max_size: int = 10**8, p: int = P) -> MatrixGroup:
    g = MatrixGroup(gens, p, max_size)
    g.order()
    return g


# -- reference fixtures for the GF(5) representation --------------------------

REFERENCE_ALPHA_TO_EPSILON = (
    ((4, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
    ((4, 3, 1, 0, 0), (3, 4, 1, 0, 0), (1, 1, 3, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
    ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 4, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
    ((1, 0, 0, 0, 0), (0, 4, 1, 3, 0), (0, 1, 3, 1, 0), (0, 3, 1, 4, 0), (0, 0, 0, 0, 1)),
    ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 3, 1), (0, 0, 0, 2, 2)),
)
REFERENCE_FORM_K = ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 3))
V0 = (0, 0, 0, 0, 1)


def reference_generators() -> list[np.ndarray]:
    return [fp_matrix(m) for m in REFERENCE_ALPHA_TO_EPSILON]


def reference_form() -> np.ndarray:
    return fp_matrix(REFERENCE_FORM_K)


@dataclass(frozen=True)
class F5Representation:
    """Reduced generators of [5,3,3,3] in a basis where the form is diagonal."""

    raw_generators: list[np.ndarray]
    raw_form: np.ndarray
    change: np.ndarray
    generators: list[np.ndarray]
    form: np.ndarray


def f5_representation() -> F5Representation:
    """Reduce [5,3,3,3] mod (phi - 3) and diagonalize the image of B.

    B itself is half the golden-integer form; 1/2 = 3 in GF(5).
    """
    d = diagram_G()
    raw = [reduce_mod_phi_minus_3(g) for g in reflection_generators(d)]
    form = reduce_mod_phi_minus_3(bilinear_form(d)) * pow(2, -1, P) % P
    change = diagonalize_form(form, nonsquare=3)
    return F5Representation(
        raw_generators=raw,
        raw_form=form,
        change=change,
        generators=conjugate_generators(raw, change),
        form=change.T @ form @ change % P,
    )
