"""Membership in normal closures, answered with certified three-valued verdicts."""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Mapping, Sequence

from .abelian import AbelianQuotient
from .cosets import CosetTable, todd_coxeter
from .tietze import simplify
from .verdict import Verdict
from .words import Presentation, Word


@dataclass(frozen=True)
class Budget:
    """Resource limits. Doubling a budget never turns a YES into a NO or back."""

    cosets: int = 50000
    word_length: int = 64
    search_nodes: int = 4000
    perm_degree: int = 4
    perm_tuples: int = 20000

    def scaled(self, factor: int) -> "Budget":
        return replace(self, cosets=self.cosets * factor, word_length=self.word_length * factor,
                       search_nodes=self.search_nodes * factor,
                       perm_degree=self.perm_degree * factor,
                       perm_tuples=self.perm_tuples * factor)

    def to_dict(self) -> dict:
        return {"cosets": self.cosets, "word_length": self.word_length,
                "search_nodes": self.search_nodes, "perm_degree": self.perm_degree,
                "perm_tuples": self.perm_tuples}


DEFAULT_BUDGET = Budget()


def _encode(word: Word, cols: dict[str, int]) -> tuple[int, ...]:
    return tuple(cols[s] + (0 if e == 1 else 1) for s, e in word)


def _cyc_reduce(w: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for x in w:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    i, j = 0, len(out) - 1
    while i < j and out[i] == out[j] ^ 1:
        i += 1
        j -= 1
    return tuple(out[i:j + 1])


def _min_rotation(w: tuple[int, ...]) -> tuple[int, ...]:
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def conjugate_product_search(relators: Sequence[tuple[int, ...]], w: tuple[int, ...],
                             max_length: int, max_nodes: int) -> int | None:
    """Best-first search for a derivation of ``w`` from the relators.

    States are cyclically reduced words up to rotation (membership in a normal
    subgroup is conjugation invariant). A move inserts a rotation of some
    relator or its inverse at a position where it cancels at least one letter.
    Returns the number of expanded states on success, None otherwise.
    """
    start = _cyc_reduce(w)
    if not start:
        return 0
    if len(start) > max_length:
        return None
    pieces = set()
    for r in relators:
        inv = tuple(x ^ 1 for x in reversed(r))
        for base in (r, inv):
            for i in range(len(base)):
                pieces.add(base[i:] + base[:i])
    by_first: dict[int, list[tuple[int, ...]]] = {}
    by_last: dict[int, list[tuple[int, ...]]] = {}
    for piece in pieces:
        by_first.setdefault(piece[0], []).append(piece)
        by_last.setdefault(piece[-1], []).append(piece)
    counter = itertools.count()
    heap = [(len(start), next(counter), start)]
    seen = {_min_rotation(start)}
    expanded = 0
    while heap and expanded < max_nodes:
        _, _, s = heapq.heappop(heap)
        expanded += 1
        n = len(s)
        for pos in range(n):
            rot = s[pos:] + s[:pos]          # insertion point at the front of rot
            cands = by_first.get(rot[-1] ^ 1, []) + by_last.get(rot[0] ^ 1, [])
            for piece in cands:
                new = _cyc_reduce(piece + rot)
                if not new:
                    return expanded
                if len(new) > max_length:
                    continue
                key = _min_rotation(new)
                if key in seen:
                    continue
                seen.add(key)
                heapq.heappush(heap, (len(new), next(counter), new))
    return None


def _perm_compose_word(perms, w):
    n = len(perms[0][0])
    images = []
    for x in range(n):
        for col in w:
            g, inv = divmod(col, 2)
            x = perms[g][inv][x]
        images.append(x)
    return images


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    q = [0] * len(p)
    for i, x in enumerate(p):
        q[x] = i
    return tuple(q)


def _conjugacy_key(choice: tuple[tuple[int, ...], ...], conjugators) -> tuple:
    keys = []
    for s in conjugators:
        si = _inverse(s)
        keys.append(tuple(tuple(s[p[si[x]]] for x in range(len(s))) for p in choice))
    return min(keys)


def permutation_representations(gens: Sequence[str], relators: Sequence[tuple[int, ...]],
                                max_degree: int, max_tuples: int, keep: int = 400):
    """Homomorphisms to ``S_d`` (``2 <= d <= max_degree``) with non-abelian image.

    Abelian images cannot see words in the commutator subgroup, and those are
    the only words left once the abelianization has been consulted. One
    representative per conjugacy class is kept.
    """
    found = []
    if not gens:
        return found
    spent = 0
    for d in range(3, max_degree + 1):
        perms = list(itertools.permutations(range(d)))
        total = len(perms) ** len(gens)
        if spent + total > max_tuples:
            break
        spent += total
        seen = set()
        ident = list(range(d))
        for choice in itertools.product(perms, repeat=len(gens)):
            if all(p == choice[0] or p == tuple(ident) for p in choice):
                continue
            pair = [(p, _inverse(p)) for p in choice]
            if any(_perm_compose_word(pair, r) != ident for r in relators):
                continue
            commute = all(tuple(p[q[x]] for x in range(d)) == tuple(q[p[x]] for x in range(d))
                          for p, q in itertools.combinations(choice, 2))
            if commute:
                continue
            key = _conjugacy_key(choice, perms)
            if key in seen:
                continue
            seen.add(key)
            found.append((d, pair, choice))
            if len(found) >= keep:
                return found
    return found


def permutation_quotient_witness(gens: Sequence[str], relators: Sequence[tuple[int, ...]],
                                 w: tuple[int, ...], max_degree: int, max_tuples: int,
                                 reps=None):
    """Find a homomorphism to ``S_d`` killing the relators but not ``w``."""
    if reps is None:
        reps = permutation_representations(gens, relators, max_degree, max_tuples)
    for d, pair, choice in reps:
        if _perm_compose_word(pair, w) != list(range(d)):
            return d, {g: list(p) for g, p in zip(gens, choice)}
    return None


def cyclic_free_product_orders(p: Presentation) -> dict[str, int] | None:
    """Orders if every relator is a power of one generator (0 means infinite)."""
    orders = {g: 0 for g in p.generators}
    for r in p.relators:
        r = r.cyclically_reduced()
        if not r:
            continue
        syms = r.symbols()
        if len(syms) != 1:
            return None
        (g,) = syms
        orders[g] = math.gcd(orders[g], len(r))
    return orders


def cyclic_free_product_normal_form(w: Word, orders: Mapping[str, int]) -> list[tuple[str, int]]:
    """Syllable normal form in a free product of cyclic groups."""
    stack: list[list] = []
    for s, e in w:
        if stack and stack[-1][0] == s:
            stack[-1][1] += e
        else:
            stack.append([s, e])
        n = orders[s]
        top = stack[-1]
        if n:
            top[1] %= n
        if top[1] == 0:
            stack.pop()
    return [(s, e) for s, e in stack]


class Quotient:
    """The group ``<gens | relators, normal_gens>`` with cached decision aids."""

    def __init__(self, presentation: Presentation, normal_gens: Sequence[Word] = (),
                 budget: Budget = DEFAULT_BUDGET):
        self.base = presentation
        self.normal_gens = tuple(w.reduced() for w in normal_gens)
        for w in self.normal_gens:
            presentation.check_word(w)
        self.presentation = presentation.with_relators(self.normal_gens)
        self.budget = budget

    @cached_property
    def abelian(self) -> AbelianQuotient:
        return AbelianQuotient(self.presentation)

    @cached_property
    def simplified(self) -> tuple[Presentation, dict[str, Word]]:
        return simplify(self.presentation)

    @cached_property
    def _cols(self) -> dict[str, int]:
        return {g: 2 * i for i, g in enumerate(self.simplified[0].generators)}

    @cached_property
    def _relators(self) -> list[tuple[int, ...]]:
        simple = self.simplified[0]
        return [_encode(r, self._cols) for r in simple.relators if r]

    @cached_property
    def table(self) -> CosetTable | None:
        """Regular coset table of the simplified quotient, if it is finite and small."""
        if not self.abelian.invariants.is_finite:
            return None
        return todd_coxeter(self.simplified[0], (), self.budget.cosets)

    @cached_property
    def cyclic_orders(self) -> dict[str, int] | None:
        return cyclic_free_product_orders(self.simplified[0])

    @cached_property
    def representations(self):
        simple = self.simplified[0]
        return permutation_representations(simple.generators, self._relators,
                                           self.budget.perm_degree, self.budget.perm_tuples)

    @cached_property
    def abelian_group(self) -> bool:
        """Certified commutativity of the simplified generators."""
        gens = self.simplified[0].generators
        for i, j in itertools.combinations(range(len(gens)), 2):
            comm = (2 * i, 2 * j, 2 * i + 1, 2 * j + 1)
            if conjugate_product_search(self._relators, comm, self.budget.word_length,
                                        self.budget.search_nodes) is None:
                return False
        return True

    def normal_form(self, w: Word):
        """A hashable key equal for two words iff they are equal in the group.

        Available for free, cyclic free product, finite and certified abelian
        quotients; None otherwise.
        """
        simple, _ = self.simplified
        ws = self.rewrite(w)
        if not any(simple.relators):
            return ("free", ws.letters)
        if self.cyclic_orders is not None:
            return ("cyclic", tuple(cyclic_free_product_normal_form(ws, self.cyclic_orders)))
        table = self.table
        if table is not None and table.complete:
            return ("coset", table.act(0, ws))
        if not self.representations and self.abelian_group:
            return ("abelian", self.abelian.coordinates(w))
        return None

    def rewrite(self, w: Word) -> Word:
        return w.substitute(self.simplified[1]).reduced()

    def is_trivial(self, w: Word) -> Verdict:
        self.base.check_word(w)
        w = w.reduced()
        if not w:
            return Verdict.yes(method="free-reduction")
        if not self.abelian.is_zero(w):
            return Verdict.no(method="abelianization",
                              invariants=str(self.abelian.invariants),
                              image=self.abelian.image(w))
        simple, _ = self.simplified
        ws = self.rewrite(w)
        if not ws.cyclically_reduced():
            return Verdict.yes(method="tietze", presentation=str(simple))
        if not any(simple.relators):
            return Verdict.no(method="tietze-free", presentation=str(simple), image=str(ws))
        orders = self.cyclic_orders
        if orders is not None:
            nf = cyclic_free_product_normal_form(ws, orders)
            cert = {"method": "cyclic-free-product", "presentation": str(simple)}
            if nf:
                return Verdict.no(normal_form=" ".join(f"{s}^{e}" for s, e in nf), **cert)
            return Verdict.yes(**cert)
        table = self.table
        if table is not None and table.complete:
            trivial = table.act(0, ws) == 0
            cert = {"method": "enumeration", "order": table.index}
            return Verdict.yes(**cert) if trivial else Verdict.no(**cert)
        code = _encode(ws, self._cols)
        witness = permutation_quotient_witness(simple.generators, self._relators, code,
                                               self.budget.perm_degree, self.budget.perm_tuples,
                                               self.representations)
        if witness is not None:
            degree, images = witness
            return Verdict.no(method="permutation-quotient", degree=degree, images=images)
        if self.abelian_group:
            return Verdict.yes(method="abelian-group", presentation=str(simple))
        steps = conjugate_product_search(self._relators, code, self.budget.word_length,
                                         self.budget.search_nodes)
        if steps is not None:
            return Verdict.yes(method="conjugate-product", expanded=steps)
        return Verdict.unknown("budget", cosets=self.budget.cosets,
                               word_length=self.budget.word_length)


def word_trivial_in_quotient(p: Presentation, normal_gens: Sequence[Word], w: Word,
                             budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Decide whether ``w`` lies in the normal closure of ``normal_gens`` in ``p``."""
    return Quotient(p, normal_gens, budget).is_trivial(w)
