"""HLT coset enumeration with lookahead and a live-coset budget.

Columns are laid out as ``2*i`` for generator ``i`` and ``2*i + 1`` for its
inverse, so ``col ^ 1`` is the inverse column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Presentation, Word

UNDEF = -1


@dataclass(frozen=True)
class CosetTable:
    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    complete: bool
    max_live: int
    definitions: int

    @property
    def index(self) -> int | None:
        return len(self.rows) if self.complete else None

    @property
    def status(self) -> str:
        return "complete" if self.complete else "budget-exceeded"

    def column(self, letter) -> int:
        sym, e = letter
        return 2 * self.generators.index(sym) + (0 if e == 1 else 1)

    def act(self, coset: int, word: Word) -> int | None:
        """Right action of ``word`` on ``coset``; None if the path leaves the table."""
        cols = {g: 2 * i for i, g in enumerate(self.generators)}
        for sym, e in word:
            nxt = self.rows[coset][cols[sym] + (0 if e == 1 else 1)]
            if nxt == UNDEF:
                return None
            coset = nxt
        return coset

    def permutation(self, sym: str) -> tuple[int, ...]:
        c = 2 * self.generators.index(sym)
        return tuple(row[c] for row in self.rows)


class _Exhausted(Exception):
    pass


class _Enumerator:
    def __init__(self, ncols: int, max_live: int, max_rows: int):
        self.ncols = ncols
        self.max_live = max_live
        self.max_rows = max_rows
        self.table: list[list[int]] = [[UNDEF] * ncols]
        self.p: list[int] = [0]
        self.live = 1
        self.peak = 1
        self.rels: list[tuple[int, ...]] = []
        self.subgens: list[tuple[int, ...]] = []

    # union-find over cosets; the smaller index always survives
    def rep(self, c: int) -> int:
        p = self.p
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def alive(self, c: int) -> bool:
        return self.p[c] == c

    def define(self, c: int, x: int) -> bool:
        if self.live >= self.max_live or len(self.table) >= self.max_rows:
            return False
        d = len(self.table)
        self.table.append([UNDEF] * self.ncols)
        self.p.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        self.live += 1
        self.peak = max(self.peak, self.live)
        return True

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        a, b = self.rep(k), self.rep(l)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.p[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(self.ncols):
                d = row[x]
                if d == UNDEF:
                    continue
                table[d][x ^ 1] = UNDEF
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] != UNDEF:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] != UNDEF:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan(self, c: int, w: Sequence[int], fill: bool) -> bool:
        """Trace ``w`` from ``c`` both ways; returns False if a definition was refused."""
        table = self.table
        while True:
            f, i = c, 0
            b, j = c, len(w) - 1
            while i <= j and table[f][w[i]] != UNDEF:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return True
            while j >= i and table[b][w[j] ^ 1] != UNDEF:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return True
            if not fill:
                return True
            if not self.define(f, w[i]):
                return False

    def lookahead(self) -> bool:
        for c in range(len(self.table)):
            if not self.alive(c):
                continue
            for r in self.rels:
                if not self.alive(c):
                    break
                self.scan(c, r, fill=False)
        for h in self.subgens:
            self.scan(0, h, fill=False)
        return self.live < self.max_live and len(self.table) < self.max_rows

    def scan_fill(self, c: int, w: Sequence[int]) -> None:
        while self.alive(c):
            if self.scan(c, w, fill=True):
                return
            if not self.lookahead():
                raise _Exhausted

    def run(self) -> bool:
        try:
            for h in self.subgens:
                self.scan_fill(0, h)
            c = 0
            while c < len(self.table):
                for r in self.rels:
                    if not self.alive(c):
                        break
                    self.scan_fill(c, r)
                for x in range(self.ncols):
                    while self.alive(c) and self.table[c][x] == UNDEF:
                        if not self.define(c, x) and not self.lookahead():
                            raise _Exhausted
                c += 1
        except _Exhausted:
            return False
        return True

    def compact(self) -> list[tuple[int, ...]]:
        live = [c for c in range(len(self.table)) if self.alive(c)]
        renum = {c: i for i, c in enumerate(live)}
        return [tuple(renum[self.rep(x)] if x != UNDEF else UNDEF for x in self.table[c])
                for c in live]


def _encode(word: Word, cols: dict[str, int]) -> tuple[int, ...]:
    return tuple(cols[s] + (0 if e == 1 else 1) for s, e in word)


def todd_coxeter(presentation: Presentation, subgroup_gens: Sequence[Word] = (),
                 max_cosets: int = 50000, max_rows: int | None = None) -> CosetTable:
    """Enumerate the right cosets of ``<subgroup_gens>`` in the presented group.

    ``max_cosets`` bounds the number of simultaneously live cosets. When it is
    reached a lookahead pass tries to free space; if none is freed the table is
    returned with ``complete=False``.
    """
    gens = presentation.generators
    cols = {g: 2 * i for i, g in enumerate(gens)}
    if max_rows is None:
        max_rows = 8 * max_cosets + 64
    en = _Enumerator(2 * len(gens), max(1, max_cosets), max_rows)
    en.rels = [_encode(r.cyclically_reduced(), cols) for r in presentation.relators if r]
    en.rels = [r for r in en.rels if r]
    for h in subgroup_gens:
        presentation.check_word(h)
    en.subgens = [w for w in (_encode(h.reduced(), cols) for h in subgroup_gens) if w]
    complete = en.run()
    rows = en.compact()
    if complete:
        complete = all(x != UNDEF for row in rows for x in row)
    return CosetTable(gens, tuple(rows), complete, en.peak, len(en.table))


def relators_hold(table: CosetTable, relators: Sequence[Word]) -> bool:
    """Every relator fixes every coset (exhaustive check of a complete table)."""
    for r in relators:
        for c in range(len(table.rows)):
            if table.act(c, r) != c:
                return False
    return True
