"""Colorings of facet graphs and what they determine: validity, orientability,
the first Betti number of the associated real toric space, and tessellation
counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import codes, gf2
from .gf2 import BinaryMatrix
from .graphs import FacetGraph, FreeCyclicAction, bits, is_good_set, popcount

PRISMS_PER_Q = 14400


class IncompatibleQuotient(ValueError):
    pass


@dataclass
class Coloring:
    m: int
    colors: list[int]  # packed vectors of length m, one per vertex
    shift: int | None = None  # k for colorings built from A^(k)
    validated: dict[int, bool] = field(default_factory=dict)  # clique bound -> verdict

    def __post_init__(self):
        for c in self.colors:
            if c == 0 or c >> self.m:
                raise ValueError("colors must be nonzero vectors of length m")

    @property
    def characteristic_matrix(self) -> BinaryMatrix:
        return BinaryMatrix.from_columns(self.colors, self.m)

    @classmethod
    def from_matrix(cls, lam: BinaryMatrix, shift: int | None = None) -> Coloring:
        return cls(lam.rows, lam.columns(), shift)


@dataclass
class Violation:
    clique: tuple[int, ...]
    colors: tuple[int, ...]


def validate_coloring(g: FacetGraph, c: Coloring, clique_bound: int = 5) -> tuple[bool, Violation | None]:
    """Colors on every clique of size <= clique_bound must be independent.

    Depth-first over increasing cliques, carrying the span of the colors so
    far; the first clique whose new color already lies in that span is
    returned as the witness.
    """
    if len(c.colors) != g.n:
        raise ValueError("coloring and graph disagree on the vertex count")
    colors = c.colors
    adj = g.adj

    def extend(clique, span, cand):
        if len(clique) == clique_bound:
            return None
        for v in bits(cand):
            col = colors[v]
            if col in span:
                bad = clique + (v,)
                return Violation(bad, tuple(colors[u] for u in bad))
            hit = extend(clique + (v,), span | {s ^ col for s in span}, cand & adj[v] & ~((2 << v) - 1))
            if hit:
                return hit
        return None

    for v in range(g.n):
        hit = extend((v,), frozenset({0, colors[v]}), adj[v] & ~((2 << v) - 1))
        if hit:
            c.validated[clique_bound] = False
            return False, hit
    c.validated[clique_bound] = True
    return True, None


def _psi_classes(g: FacetGraph, good: Sequence[int], psi: FreeCyclicAction) -> list[int]:
    """``cls[v] = j`` when ``v`` lies in ``psi^j(I)``."""
    cls = [-1] * g.n
    for u in good:
        x = u
        for j in range(psi.order):
            cls[x] = j
            x = psi.perm[x]
    if -1 in cls:
        raise ValueError("I is not a transversal of the psi-orbits")
    return cls


def basis_coloring(g: FacetGraph, good: Sequence[int], psi: FreeCyclicAction) -> Coloring:
    if not is_good_set(g, psi, good):
        raise ValueError("I is not a good independent set")
    cls = _psi_classes(g, good, psi)
    return Coloring(psi.order, [1 << j for j in cls])


def qr_coloring(
    g: FacetGraph, good: Sequence[int], psi: FreeCyclicAction, k: int, A: BinaryMatrix | None = None
) -> Coloring:
    """Facets in ``psi^(jk)(I)`` get column ``A_j``; equivalently ``psi^j(I)`` gets ``A^(k)_j``."""
    if not is_good_set(g, psi, good):
        raise ValueError("I is not a good independent set")
    shifted = codes.build_shifted_family(k, A)
    cols = shifted.columns()
    cls = _psi_classes(g, good, psi)
    return Coloring(shifted.rows, [cols[j] for j in cls], shift=k % 17)


def partition_coloring(n: int, parts: Sequence[Sequence[int]], columns: Sequence[int], m: int) -> Coloring:
    """Give every vertex of ``parts[i]`` the packed color ``columns[i]``."""
    colors = [0] * n
    for part, col in zip(parts, columns):
        for v in part:
            colors[v] = col
    return Coloring(m, colors)


def orientability_witness(c: Coloring) -> int | None:
    """``w`` with ``w . color = 1`` for every color, i.e. ``w Lambda = (1,...,1)``."""
    lam = c.characteristic_matrix
    return gf2.solve_row(lam, (1 << lam.cols) - 1)


# -- first Betti number ----------------------------------------------------


def support_masks(c: Coloring, guard: int = gf2.ROW_SPACE_GUARD):
    """Vertex masks of the nonzero row-space words of Lambda, in Gray-code order."""
    for w in gf2.row_space(c.characteristic_matrix, guard):
        if w:
            yield w


def betti_contributions(g: FacetGraph, c: Coloring, omegas: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """``(support, b0 - 1)`` per word; ``omegas`` are row-space words (vertex masks)."""
    words = support_masks(c) if omegas is None else omegas
    return [(w, g.induced_components(w) - 1) for w in words]


def first_betti(g: FacetGraph, c: Coloring) -> int:
    """Sum over nonzero words of the row space of (components of the induced subgraph) - 1."""
    return sum(g.induced_components(w) - 1 for w in support_masks(c))


def coordinate_words(c: Coloring) -> list[int]:
    """Supports of the rows of Lambda (the words with a single nonzero coordinate)."""
    return list(c.characteristic_matrix.data)


def min_support(c: Coloring) -> int:
    return min(popcount(w) for w in support_masks(c))


# -- quotient and ledger ---------------------------------------------------


def quotient_compatibility(c: Coloring, psi: FreeCyclicAction, R: BinaryMatrix, k: int | None = None) -> bool:
    """color(psi^k F) = R color(F) for every facet F."""
    if R.rows != c.m or R.cols != c.m:
        return False
    k = c.shift if k is None else k
    if k is None:
        return False
    step = psi.power(k)
    return all(c.colors[step[v]] == gf2.mat_vec(R, c.colors[v]) for v in range(len(c.colors)))


@dataclass(frozen=True)
class ManifoldLedger:
    m: int
    facets_per_piece: int
    prisms_per_facet_block: int
    quotient: int
    copies_of_piece: int  # 2^m copies of the right-angled piece before the quotient
    copies_of_q: int
    prisms: int
    volume: float
    volume_error: float
    orientable: bool
    witness: int | None

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "facets_per_piece": self.facets_per_piece,
            "prisms_per_facet_block": self.prisms_per_facet_block,
            "quotient": self.quotient,
            "copies_of_piece": self.copies_of_piece,
            "copies_of_Q": self.copies_of_q,
            "prisms": self.prisms,
            "volume": self.volume,
            "volume_error": self.volume_error,
            "orientable": self.orientable,
            "orientation_witness": None if self.witness is None else gf2.unpack(self.witness, self.m),
        }


def ledger(
    g: FacetGraph | None,
    c: Coloring,
    facets_per_piece: int | None = None,
    prisms_per_facet_block: int = PRISMS_PER_Q,
    quotient: int = 1,
    psi: FreeCyclicAction | None = None,
    R: BinaryMatrix | None = None,
    with_volume: bool = True,
) -> ManifoldLedger:
    """Counts for the manifold glued from ``2^m`` copies of the piece, divided by ``quotient``.

    Each facet of the piece is one copy of the prism block Q
    (``prisms_per_facet_block`` copies of P).  A quotient other than 1 is
    only accepted when the coloring is compatible with ``R`` under ``psi``.
    """
    if facets_per_piece is None:
        facets_per_piece = g.n if g is not None else len(c.colors)
    if quotient != 1:
        if psi is None or R is None or not quotient_compatibility(c, psi, R):
            raise IncompatibleQuotient("the coloring does not descend to the quotient")
        if psi.order != quotient:
            raise IncompatibleQuotient(f"quotient {quotient} differs from the symmetry order {psi.order}")
    blocks = (1 << c.m) * facets_per_piece
    if blocks % quotient:
        raise IncompatibleQuotient(f"{quotient} does not divide {blocks}")
    copies_q = blocks // quotient
    prisms = copies_q * prisms_per_facet_block
    vol = err = float("nan")
    if with_volume:
        from .zetavol import vol_of_prisms

        z = vol_of_prisms(prisms)
        vol, err = float(z.value), float(z.error_bound)
    w = orientability_witness(c)
    return ManifoldLedger(
        m=c.m,
        facets_per_piece=facets_per_piece,
        prisms_per_facet_block=prisms_per_facet_block,
        quotient=quotient,
        copies_of_piece=1 << c.m,
        copies_of_q=copies_q,
        prisms=prisms,
        volume=vol,
        volume_error=err,
        orientable=w is not None,
        witness=w,
    )
