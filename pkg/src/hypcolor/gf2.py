"""Linear algebra over GF(2) with rows packed into Python ints.

Bit ``j`` of a row integer holds column ``j``.  Bits at positions ``>= cols``
are always zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

ROW_SPACE_GUARD = 30


class EnumerationTooLarge(ValueError):
    pass


class UndefinedDistance(ValueError):
    pass


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        mask = ~((1 << self.cols) - 1)
        for r in self.data:
            if r < 0 or r & mask:
                raise ValueError("row has bits outside the column range")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> BinaryMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            data.append(pack(r))
        return cls(len(data), cols, tuple(data))

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> BinaryMatrix:
        rows = [[int(ch) for ch in line.strip()] for line in lines if line.strip()]
        return cls.from_rows(rows)

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> BinaryMatrix:
        """Build a matrix whose ``j``-th column is the packed vector ``columns[j]``."""
        data = [0] * rows
        for j, c in enumerate(columns):
            for i in range(rows):
                if (c >> i) & 1:
                    data[i] |= 1 << j
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(rows, cols, (0,) * rows)

    # -- access -----------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [unpack(r, self.cols) for r in self.data]

    def to_strings(self) -> list[str]:
        return ["".join(map(str, row)) for row in self.to_lists()]

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int (bit ``i`` = row ``i``)."""
        v = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                v |= 1 << i
        return v

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> BinaryMatrix:
        return BinaryMatrix(self.cols, self.rows, tuple(self.columns()))

    def __matmul__(self, other: BinaryMatrix) -> BinaryMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.data:
            acc = 0
            i = 0
            while r:
                if r & 1:
                    acc ^= other.data[i]
                r >>= 1
                i += 1
            out.append(acc)
        return BinaryMatrix(self.rows, other.cols, tuple(out))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.data)

    def permute_columns(self, perm: Sequence[int]) -> BinaryMatrix:
        """Return the matrix whose column ``j`` is column ``perm[j]`` of self."""
        return BinaryMatrix.from_columns([self.column(p) for p in perm], self.rows)

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def pack(bits: Sequence[int]) -> int:
    v = 0
    for j, b in enumerate(bits):
        if b & 1:
            v |= 1 << j
    return v


def unpack(v: int, n: int) -> list[int]:
    return [(v >> j) & 1 for j in range(n)]


def weight(v: int) -> int:
    return bin(v).count("1")


def dot(u: int, v: int) -> int:
    return weight(u & v) & 1


def vec_mat(w: int, m: BinaryMatrix) -> int:
    """Row vector times matrix: XOR of the rows selected by ``w``."""
    acc = 0
    i = 0
    while w:
        if w & 1:
            acc ^= m.data[i]
        w >>= 1
        i += 1
    return acc


def mat_vec(m: BinaryMatrix, v: int) -> int:
    """Matrix times column vector ``v`` (packed over columns)."""
    out = 0
    for i, r in enumerate(m.data):
        if weight(r & v) & 1:
            out |= 1 << i
    return out


# -- elimination ----------------------------------------------------------


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Zero rows are kept at the bottom so the shape is preserved.
    """
    work = list(m.data)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        bit = 1 << col
        p = next((k for k in range(r, len(work)) if work[k] & bit), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        for k in range(len(work)):
            if k != r and work[k] & bit:
                work[k] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return BinaryMatrix(m.rows, m.cols, tuple(work)), len(pivots), pivots


def rank(m: BinaryMatrix) -> int:
    return rank_of_vectors(m.data)


def rank_of_vectors(vectors: Iterable[int]) -> int:
    """Rank of a collection of packed vectors, via an xor basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                break
            v ^= b
    return len(basis)


def row_basis(m: BinaryMatrix) -> list[int]:
    red, r, _ = rref(m)
    return list(red.data[:r])


def kernel_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Rows spanning ``{v : M v^T = 0}``."""
    red, r, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    out = []
    for f in free:
        v = 1 << f
        for i, p in enumerate(pivots):
            if (red.data[i] >> f) & 1:
                v |= 1 << p
        out.append(v)
    return BinaryMatrix(len(out), m.cols, tuple(out))


def row_space(m: BinaryMatrix, guard: int = ROW_SPACE_GUARD) -> Iterator[int]:
    """All ``2**rank`` vectors of the row space, in Gray-code order over the RREF basis."""
    basis = row_basis(m)
    if len(basis) > guard:
        raise EnumerationTooLarge(f"row space of rank {len(basis)} exceeds 2^{guard}")
    v = 0
    yield v
    for i in range(1, 1 << len(basis)):
        # bit flipped between gray(i-1) and gray(i) is the lowest set bit of i
        v ^= basis[(i & -i).bit_length() - 1]
        yield v


def min_distance(m: BinaryMatrix, guard: int = ROW_SPACE_GUARD) -> int:
    best = None
    for v in row_space(m, guard):
        if v:
            w = weight(v)
            if best is None or w < best:
                best = w
    if best is None:
        raise UndefinedDistance("row space is zero")
    return best


def weight_distribution(m: BinaryMatrix, guard: int = ROW_SPACE_GUARD) -> list[int]:
    dist = [0] * (m.cols + 1)
    for v in row_space(m, guard):
        dist[weight(v)] += 1
    return dist


def no_k_columns_dependent(m: BinaryMatrix, k: int) -> bool:
    """True iff every set of at most ``k`` columns is linearly independent.

    A dependency among ``j`` columns is a kernel vector of weight ``j``, so
    this holds iff the right kernel has no nonzero word of weight ``<= k``.
    """
    if k > m.cols:
        raise ValueError("k exceeds the number of columns")
    ker = kernel_basis(m)
    if ker.rows == 0:
        return True
    return min_distance(ker) > k


def left_equivalent(m: BinaryMatrix, n: BinaryMatrix) -> bool:
    if m.shape != n.shape:
        raise ValueError(f"shape mismatch {m.shape} vs {n.shape}")
    return rref(m)[0] == rref(n)[0]


def solve_row(m: BinaryMatrix, target: int) -> int | None:
    """Find ``w`` with ``w M = target``, or None."""
    if target >> m.cols:
        raise ValueError("target longer than the column count")
    # track which original rows combine into each reduced row
    work = list(zip(m.data, (1 << i for i in range(m.rows))))
    basis: dict[int, tuple[int, int]] = {}
    for v, tag in work:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = (v, tag)
                break
            v ^= b[0]
            tag ^= b[1]
    t, w = target, 0
    while t:
        h = t.bit_length() - 1
        b = basis.get(h)
        if b is None:
            return None
        t ^= b[0]
        w ^= b[1]
    return w
