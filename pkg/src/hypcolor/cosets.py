"""Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Words are strings of generator letters; an uppercase letter is the inverse of
its lowercase generator, so ``"decd"`` and ``"bacbab"`` read in the usual word notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

DEFAULT_MAX_COSETS = 10**6


class EnumerationOverflow(RuntimeError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        for g in self.generators:
            if len(g) != 1 or not g.islower():
                raise ValueError(f"generator {g!r} must be a single lowercase letter")
        for r in self.relators:
            if not r:
                raise ValueError("empty relator")
            self.encode(r)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def encode(self, word: str) -> list[int]:
        """Letters to table columns: generator ``i`` is ``2i``, its inverse ``2i+1``."""
        out = []
        for ch in word:
            try:
                i = self.generators.index(ch.lower())
            except ValueError:
                raise ValueError(f"unknown letter {ch!r} in {word!r}") from None
            out.append(2 * i + (1 if ch.isupper() else 0))
        return out


def coxeter_presentation(labels: dict[tuple[int, int], int], names: str) -> Presentation:
    """Presentation with relators ``g_i^2`` and ``(g_i g_j)^{m_ij}``.

    ``labels`` maps node pairs to their Coxeter label; absent pairs commute
    (label 2).  Label 0 or ``inf`` means no relation.
    """
    n = len(names)
    rels = [g + g for g in names]
    for i, j in combinations(range(n), 2):
        m = labels.get((i, j), labels.get((j, i), 2))
        if m in (0, float("inf")):
            continue
        rels.append((names[i] + names[j]) * int(m))
    return Presentation(tuple(names), tuple(rels))


def long_presentation() -> Presentation:
    """The [5,3,3,3] Coxeter group on generators a..e."""
    return coxeter_presentation({(0, 1): 5, (1, 2): 3, (2, 3): 3, (3, 4): 3}, "abcde")


@dataclass(frozen=True)
class CosetTable:
    presentation: Presentation
    # action[g][c] = coset reached from c by the g-th generator (right action)
    action: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.action[0]) if self.action else 1

    def permutations(self) -> list[tuple[int, ...]]:
        return [tuple(a) for a in self.action]

    def apply_word(self, coset: int, word: str) -> int:
        inv = [_inverse_perm(a) for a in self.action]
        for col in self.presentation.encode(word):
            g, is_inv = divmod(col, 2)
            coset = inv[g][coset] if is_inv else self.action[g][coset]
        return coset


def _inverse_perm(p: Sequence[int]) -> list[int]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return out


class _Enumerator:
    def __init__(self, pres: Presentation, max_cosets: int):
        self.ncols = 2 * pres.ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1

    @staticmethod
    def inv(x: int) -> int:
        return x ^ 1

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def define(self, a: int, x: int) -> None:
        if self.live >= self.max_cosets:
            raise _Full
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(n)
        self.live += 1
        self.table[a][x] = n
        self.table[n][self.inv(x)] = a

    def scan(self, a: int, w: list[int], fill: bool) -> None:
        t = self.table
        f, i, b, j = a, 0, a, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv(w[j])] is not None:
                b = t[b][self.inv(w[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][self.inv(w[i])] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        k, l = min(k, l), max(k, l)
        self.parent[l] = k
        self.live -= 1
        queue.append(l)

    def coincidence(self, a: int, b: int) -> None:
        t = self.table
        queue: list[int] = []
        self.merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            e = queue[qi]
            qi += 1
            for x in range(self.ncols):
                f = t[e][x]
                if f is None:
                    continue
                xi = self.inv(x)
                if t[f][xi] == e:
                    t[f][xi] = None
                e1, f1 = self.rep(e), self.rep(f)
                if t[e1][x] is not None:
                    self.merge(f1, t[e1][x], queue)
                elif t[f1][xi] is not None:
                    self.merge(e1, t[f1][xi], queue)
                else:
                    t[e1][x] = f1
                    t[f1][xi] = e1

    def alive(self, c: int) -> bool:
        return self.parent[c] == c


class _Full(Exception):
    pass


def todd_coxeter(
    pres: Presentation,
    subgroup: Sequence[str] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
    lookahead: bool = True,
) -> CosetTable:
    """Enumerate the right cosets of ``<subgroup>`` in the presented group.

    Coset 0 is the subgroup itself.  The returned table is renumbered in
    breadth-first order from coset 0 (columns in generator order), so the
    numbering does not depend on the enumeration strategy.
    """
    rels = [pres.encode(r) for r in pres.relators]
    sub = [pres.encode(w) for w in subgroup if w]
    en = _Enumerator(pres, max_cosets)

    def lookahead_pass() -> None:
        for c in range(len(en.table)):
            for r in rels:
                if not en.alive(c):
                    break
                en.scan(c, r, fill=False)

    def run(step):
        while True:
            try:
                return step()
            except _Full:
                if not lookahead:
                    raise EnumerationOverflow(f"more than {max_cosets} cosets") from None
                before = en.live
                lookahead_pass()
                if en.live >= before:
                    raise EnumerationOverflow(f"more than {max_cosets} cosets") from None

    for w in sub:
        run(lambda w=w: en.scan(0, w, fill=True))
    c = 0
    while c < len(en.table):
        for r in rels:
            if not en.alive(c):
                break
            run(lambda r=r, c=c: en.scan(c, r, fill=True))
        if en.alive(c):
            for x in range(en.ncols):
                if en.table[c][x] is None:
                    run(lambda x=x, c=c: en.define(c, x))
        c += 1

    return _standardize(pres, en)


def _standardize(pres: Presentation, en: _Enumerator) -> CosetTable:
    order = [0]
    label = {0: 0}
    for c in order:
        for x in range(0, en.ncols, 2):
            d = en.rep(en.table[c][x])
            if d not in label:
                label[d] = len(order)
                order.append(d)
    action = []
    for x in range(0, en.ncols, 2):
        action.append(tuple(label[en.rep(en.table[c][x])] for c in order))
    table = CosetTable(pres, tuple(action))
    _check_closed(table, pres)
    return table


def _check_closed(table: CosetTable, pres: Presentation) -> None:
    perms = table.action
    inv = [_inverse_perm(p) for p in perms]
    for p in perms:
        if sorted(p) != list(range(len(p))):
            raise AssertionError("coset table column is not a permutation")
    for r in pres.relators:
        word = pres.encode(r)
        for c in range(table.index):
            d = c
            for col in word:
                g, is_inv = divmod(col, 2)
                d = inv[g][d] if is_inv else perms[g][d]
            if d != c:
                raise AssertionError(f"relator {r} acts nontrivially on coset {c}")
