"""The length-17 quadratic residue code data and a small [13,4,6] code search."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from math import gcd

from . import gf2
from .gf2 import BinaryMatrix

A_ROWS = (
    "11101011100000000",
    "01110101110000000",
    "00111010111000000",
    "00011101011100000",
    "00001110101110000",
    "00000111010111000",
    "00000011101011100",
    "00000001110101110",
    "00000000111010111",
)

B_ROWS = (
    "11010010110000000",
    "01101001011000000",
    "00110100101100000",
    "00011010010110000",
    "00001101001011000",
    "00000110100101100",
    "00000011010010110",
    "00000001101001011",
)

R_ROWS = (
    "101001011",
    "100000000",
    "010000000",
    "001000000",
    "000100000",
    "000010000",
    "000001000",
    "000000100",
    "000000010",
)

W_BITS = "100111001"

# sha256 over the newline-joined literal rows; guards against accidental edits
TABLES_SHA256 = "efd4dd2aa61496ac6e55d4cc9755ed3604b4e3bf6cff4a5aca2c052fe08268fe"

SQUARES_MOD_17 = frozenset(k * k % 17 for k in range(1, 17))


def tables_digest() -> str:
    blob = "\n".join(A_ROWS + B_ROWS + R_ROWS + (W_BITS,))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass(frozen=True)
class QrCodeTables:
    A: BinaryMatrix
    B: BinaryMatrix
    R: BinaryMatrix
    w: int  # packed, length 9

    @classmethod
    def load(cls) -> QrCodeTables:
        return cls(
            A=BinaryMatrix.from_strings(A_ROWS),
            B=BinaryMatrix.from_strings(B_ROWS),
            R=BinaryMatrix.from_strings(R_ROWS),
            w=gf2.pack([int(c) for c in W_BITS]),
        )


def qr_tables() -> QrCodeTables:
    return QrCodeTables.load()


def _check_unit(k: int) -> int:
    k %= 17
    if gcd(k, 17) != 1:
        raise ValueError(f"{k} is not a unit mod 17")
    return k


def build_shifted_family(k: int, A: BinaryMatrix | None = None) -> BinaryMatrix:
    """Column ``j`` of the result is column ``k^{-1} j mod 17`` of A."""
    k = _check_unit(k)
    if A is None:
        A = qr_tables().A
    kinv = pow(k, -1, 17)
    return A.permute_columns([kinv * j % 17 for j in range(17)])


def classify_type(k: int) -> str:
    """'+' for quadratic residues mod 17, '-' otherwise."""
    k = _check_unit(k)
    return "+" if k in SQUARES_MOD_17 else "-"


def shift_operator_ok(tables: QrCodeTables) -> bool:
    """R A_i = A_{i+1} for every column index mod 17."""
    cols = tables.A.columns()
    return all(gf2.mat_vec(tables.R, cols[i]) == cols[(i + 1) % 17] for i in range(17))


@dataclass(frozen=True)
class ShortCode:
    generator: BinaryMatrix  # 4 x 13, systematic [I | X]
    dual: BinaryMatrix  # 9 x 13 kernel basis; its columns are the colors


def find_code_13_4_6(n: int = 13, k: int = 4, d: int = 6) -> ShortCode:
    """First systematic generator ``[I_k | X]`` with min distance ``>= d``.

    Rows of X are searched in increasing order of their packed value, row 0
    first, so the hit is the lexicographically smallest X under that order.
    """
    r = n - k
    rows: list[int] = []
    span: list[int] = [0]  # codewords generated by the rows chosen so far

    def extend(i: int) -> bool:
        if i == k:
            return True
        for x in range(1 << r):
            row = (1 << i) | (x << k)
            # every new codeword is row + old codeword
            if all(gf2.weight(row ^ c) >= d for c in span):
                rows.append(row)
                added = [row ^ c for c in span]
                span.extend(added)
                if extend(i + 1):
                    return True
                del span[-len(added):]
                rows.pop()
        return False

    if not extend(0):
        raise RuntimeError(f"no [{n},{k},{d}] code in systematic form")
    gen = BinaryMatrix(k, n, tuple(rows))
    return ShortCode(generator=gen, dual=gf2.kernel_basis(gen))
