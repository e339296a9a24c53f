"""Stallings foldings for finitely generated subgroups of free groups."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .words import Letter, Word


class SubgroupGraph:
    """Folded (Stallings) graph of ``<gens>`` with base vertex 0.

    ``out[v][(sym, e)]`` is the target of the unique edge leaving ``v`` with
    that label; reading ``sym^-1`` follows a ``sym`` edge backwards.
    """

    def __init__(self, gens: Iterable[Word], alphabet: Sequence[str] | None = None):
        self.gens = tuple(w.reduced() for w in gens)
        symbols = set(alphabet or ())
        for w in self.gens:
            symbols |= w.symbols()
        self.alphabet = tuple(sorted(symbols)) if alphabet is None else tuple(alphabet)
        edges: list[tuple[int, str, int]] = []
        nv = 1
        for w in self.gens:
            if not w:
                continue
            path = [0] + list(range(nv, nv + len(w) - 1)) + [0]
            nv += len(w) - 1
            for (sym, e), u, v in zip(w, path, path[1:]):
                edges.append((u, sym, v) if e == 1 else (v, sym, u))
        self.out = self._fold(nv, edges)

    @staticmethod
    def _fold(nv: int, edges: list[tuple[int, str, int]]) -> dict[int, dict[Letter, int]]:
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        while True:
            merged = False
            out: dict[int, dict[Letter, int]] = {}
            for u, sym, v in edges:
                u, v = find(u), find(v)
                for a, letter, b in ((u, (sym, 1), v), (v, (sym, -1), u)):
                    slot = out.setdefault(a, {})
                    old = slot.get(letter)
                    if old is None:
                        slot[letter] = b
                    else:
                        ro, rb = find(old), find(b)
                        if ro != rb:
                            parent[max(ro, rb)] = min(ro, rb)
                            merged = True
            if not merged:
                break
        # renumber BFS from the base so the graph is canonical
        final: dict[int, dict[Letter, int]] = {}
        for a, slot in out.items():
            final[find(a)] = {l: find(b) for l, b in slot.items()}
        order = {find(0): 0}
        queue = deque([find(0)])
        while queue:
            a = queue.popleft()
            for letter in sorted(final.get(a, {})):
                b = final[a][letter]
                if b not in order:
                    order[b] = len(order)
                    queue.append(b)
        return {order[a]: {l: order[b] for l, b in slot.items()}
                for a, slot in final.items() if a in order} or {0: {}}

    @property
    def vertices(self) -> list[int]:
        return sorted(set(self.out) | {0})

    def read(self, w: Word, start: int = 0) -> int | None:
        v = start
        for letter in w.reduced():
            v = self.out.get(v, {}).get(letter)
            if v is None:
                return None
        return v

    def accepts(self, w: Word) -> bool:
        return self.read(w) == 0

    def index(self) -> int | None:
        """Index in the free group on ``alphabet``; None when infinite."""
        letters = [(s, e) for s in self.alphabet for e in (1, -1)]
        for v in self.vertices:
            slot = self.out.get(v, {})
            if any(l not in slot for l in letters):
                return None
        return len(self.vertices)

    def basis(self) -> list[Word]:
        """Free basis from a BFS spanning tree of the folded graph."""
        tree_word: dict[int, Word] = {0: Word()}
        queue = deque([0])
        tree_edges = set()
        while queue:
            a = queue.popleft()
            for letter in sorted(self.out.get(a, {})):
                b = self.out[a][letter]
                if b not in tree_word:
                    tree_word[b] = tree_word[a] * Word((letter,))
                    tree_edges.add((a, letter, b))
                    tree_edges.add((b, (letter[0], -letter[1]), a))
                    queue.append(b)
        basis = []
        for a in sorted(self.out):
            for letter in sorted(self.out[a]):
                if letter[1] != 1:
                    continue
                b = self.out[a][letter]
                if (a, letter, b) in tree_edges:
                    continue
                basis.append((tree_word[a] * Word((letter,)) * ~tree_word[b]).reduced())
        return basis

    def intersection(self, other: "SubgroupGraph") -> "SubgroupGraph":
        """Product-graph intersection; the result is again folded."""
        index = {(0, 0): 0}
        queue = deque([(0, 0)])
        edges: list[tuple[int, str, int]] = []
        while queue:
            a = queue.popleft()
            for letter, t1 in self.out.get(a[0], {}).items():
                t2 = other.out.get(a[1], {}).get(letter)
                if t2 is None:
                    continue
                b = (t1, t2)
                if b not in index:
                    index[b] = len(index)
                    queue.append(b)
                if letter[1] == 1:
                    edges.append((index[a], letter[0], index[b]))
        g = SubgroupGraph.__new__(SubgroupGraph)
        g.alphabet = tuple(sorted(set(self.alphabet) | set(other.alphabet)))
        g.out = SubgroupGraph._fold(len(index), edges)
        g.gens = tuple(g.basis())
        return g

    def contains_all(self, words: Iterable[Word]) -> bool:
        return all(self.accepts(w) for w in words)


def fold_membership(free_rank_gens: Sequence[str], subgroup_gens: Sequence[Word], w: Word) -> bool:
    """Exact membership of ``w`` in ``<subgroup_gens>`` inside ``F(free_rank_gens)``."""
    known = set(free_rank_gens)
    for word in list(subgroup_gens) + [w]:
        extra = word.symbols() - known
        if extra:
            raise ValueError(f"{word} uses symbols {sorted(extra)} outside the free basis")
    return SubgroupGraph(subgroup_gens, free_rank_gens).accepts(w)


def same_subgroup(alphabet: Sequence[str], gens1: Sequence[Word], gens2: Sequence[Word]) -> bool:
    g1 = SubgroupGraph(gens1, alphabet)
    g2 = SubgroupGraph(gens2, alphabet)
    return g1.contains_all(gens2) and g2.contains_all(gens1)
