"""Edge-path fundamental groups and Spanier groups of covers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .complex import (Complex, Cover, EdgeLoop, Subcomplex, descends_from, lift_cover,
                      push_path, refines, star_cover, subdivide, validate)
from .errors import DisconnectedError, NotCoverError, PathEndpointsError
from .fpgroup import (DEFAULT_BUDGET, AbelianQuotient, Budget, Letter, Presentation, Quotient,
                      Verdict, Word, conjunction, simplify, todd_coxeter)
from .fpgroup.verdict import INCOMPLETE_UNIVERSE


@dataclass(frozen=True, eq=False)
class Pi1Data:
    """Edge-path presentation of ``pi_1(complex, basepoint)``.

    Generators are the ids of non-tree edges of a breadth-first spanning tree
    (incident edges visited in id order); one relator per face.
    """

    complex: Complex
    presentation: Presentation
    parent: Mapping[str, Letter | None]
    order: Mapping[str, int]
    tree_edges: frozenset[str]

    @cached_property
    def _paths(self) -> dict[str, Word]:
        paths: dict[str, Word] = {}
        for v in sorted(self.order, key=self.order.__getitem__):
            letter = self.parent[v]
            paths[v] = Word() if letter is None else paths[self.complex.src(letter)] * Word((letter,))
        return paths

    def tree_path(self, v: str) -> Word:
        """Tree path from the basepoint to ``v``."""
        return self._paths[v]

    def path_to_word(self, path: Word) -> Word:
        """Group word of ``tree(start) * path * tree(end)^-1``."""
        return path.drop(self.tree_edges).reduced()

    def loop_to_word(self, loop: EdgeLoop) -> Word:
        loop.check(self.complex)
        return self.path_to_word(loop.edges)

    def word_to_loop(self, w: Word) -> EdgeLoop:
        c = self.complex
        out = Word()
        for letter in w:
            out = out * self.tree_path(c.src(letter)) * Word((letter,)) * ~self.tree_path(c.tgt(letter))
        return EdgeLoop(c.basepoint, out.reduced())

    @cached_property
    def abelian(self) -> AbelianQuotient:
        return AbelianQuotient(self.presentation)


def _pi1(c: Complex) -> Pi1Data:
    base = c.basepoint
    parent: dict[str, Letter | None] = {base: None}
    order = {base: 0}
    tree = set()
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for letter in c.incident(v):
            w = c.tgt(letter)
            if w not in parent:
                parent[w] = letter
                order[w] = len(order)
                tree.add(letter[0])
                queue.append(w)
    if len(parent) != len(c.vertices):
        raise DisconnectedError("the 1-skeleton is not connected")
    gens = tuple(e for e in c.edges if e not in tree)
    rels = tuple(b.drop(tree) for b in c.faces.values())
    return Pi1Data(c, Presentation(gens, rels), parent, order, frozenset(tree))


def pi1(c: Complex) -> Pi1Data:
    validate(c)
    return _pi1(c)


@dataclass(frozen=True, eq=False)
class NormalSubgroupData:
    """A normal subgroup of ``pi1`` given as the normal closure of ``words``.

    ``loops[i]`` is an edge loop at the basepoint representing ``words[i]``.
    """

    pi1: Pi1Data
    words: tuple[Word, ...]
    loops: tuple[EdgeLoop, ...]
    label: str = ""
    provenance: tuple[str, ...] = field(default=())

    def quotient(self, budget: Budget = DEFAULT_BUDGET) -> Quotient:
        return Quotient(self.pi1.presentation, self.words, budget)

    def quotient_invariants(self):
        return AbelianQuotient(self.pi1.presentation, self.words).invariants

    def to_dict(self) -> dict:
        return {"label": self.label, "normal_generators": [str(w) for w in self.words],
                "provenance": list(self.provenance),
                "presentation": str(self.pi1.presentation),
                "quotient_abelianization": str(self.quotient_invariants())}


def _component_complex(c: Complex, comp: Subcomplex, base: str) -> Complex:
    return Complex(tuple(sorted(comp.vertices)),
                   {e: c.edges[e] for e in sorted(comp.edges)},
                   {f: c.faces[f] for f in sorted(comp.faces)}, base)


def _certified_trivial(p: Presentation) -> bool:
    if not AbelianQuotient(p).invariants.is_trivial:
        return False
    table = todd_coxeter(p, (), 2000)
    return table.complete and table.index == 1


def _component_loops(c: Complex, pi: Pi1Data, comp: Subcomplex) -> list[EdgeLoop]:
    """Loops at the basepoint whose normal closure is the image of pi_1(comp)."""
    v0 = min(comp.vertices, key=pi.order.__getitem__)
    local = _pi1(_component_complex(c, comp, v0))
    if not local.presentation.generators:
        return []
    simple, _ = simplify(local.presentation)
    if not simple.generators or _certified_trivial(simple):
        return []
    lead = pi.tree_path(v0)
    loops = []
    for g in simple.generators:
        inner = local.word_to_loop(Word(((g, 1),))).edges
        loops.append(EdgeLoop(c.basepoint, (lead * inner * ~lead).reduced()))
    return loops


def _own_generators(u: Cover, label: str) -> NormalSubgroupData:
    c = u.complex
    pi = _pi1(c)
    words, loops, prov = [], [], []
    for name, el in zip(u.names, u.elements):
        for i, comp in enumerate(el.components(c)):
            for loop in _component_loops(c, pi, comp):
                w = pi.path_to_word(loop.edges)
                if w:
                    words.append(w)
                    loops.append(loop)
                    prov.append(f"{name}[{i}]")
    return NormalSubgroupData(pi, tuple(words), tuple(loops), label, tuple(prov))


def translate(d: NormalSubgroupData, target: Pi1Data) -> NormalSubgroupData:
    """Push ``d`` down the subdivision chain to ``target``'s complex."""
    if d.pi1.complex is target.complex:
        return d
    loops, words, prov = [], [], []
    for loop, p in zip(d.loops, d.provenance):
        edges = push_path(d.pi1.complex, loop.edges, target.complex)
        w = target.path_to_word(edges)
        if w:
            loops.append(EdgeLoop(target.complex.basepoint, edges))
            words.append(w)
            prov.append(p)
    return NormalSubgroupData(target, tuple(words), tuple(loops), d.label, tuple(prov))


def _check_cover(c: Complex, u: Cover) -> None:
    if not descends_from(u.complex, c):
        raise NotCoverError("cover is not a cover of this complex or of a subdivision of it")
    if u.complex.basepoint != c.basepoint:
        raise NotCoverError("cover's complex has a different basepoint")


def spanier_generators(c: Complex, u: Cover, label: str = "",
                       pi: Pi1Data | None = None) -> NormalSubgroupData:
    """Normal generators of the Spanier group of ``u``, as words of ``pi1(c)``.

    ``u`` may cover a subdivision of ``c``; its loops are pushed back to ``c``.
    """
    _check_cover(c, u)
    pi = pi or pi1(c)
    return translate(_own_generators(u, label), pi)


def _as_data(c: Complex, x, pi: Pi1Data) -> NormalSubgroupData:
    return x if isinstance(x, NormalSubgroupData) else spanier_generators(c, x, pi=pi)


def subgroup_contains(big: NormalSubgroupData, small: NormalSubgroupData,
                      budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Is the normal closure of ``small.words`` inside that of ``big.words``?"""
    q = big.quotient(budget)
    verdicts = []
    for w, p in zip(small.words, small.provenance or [""] * len(small.words)):
        v = q.is_trivial(w)
        if v.is_no:
            return v.with_certificate(generator=str(w), element=p)
        verdicts.append(v)
    return conjunction(verdicts, checked=len(small.words))


def spanier_contains(c: Complex, u, v, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Decide ``pi(v) <= pi(u)``; covers or precomputed data are accepted."""
    pi = pi1(c)
    return subgroup_contains(_as_data(c, u, pi), _as_data(c, v, pi), budget)


def spanier_equal(c: Complex, u, v, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    pi = pi1(c)
    du, dv = _as_data(c, u, pi), _as_data(c, v, pi)
    return conjunction([subgroup_contains(du, dv, budget), subgroup_contains(dv, du, budget)])


def _refines_across(v: Cover, u: Cover) -> bool:
    if v.complex is u.complex or v.complex == u.complex:
        return refines(v, u)
    if descends_from(v.complex, u.complex):
        return refines(v, lift_cover(u, v.complex))
    return False


def pi_stable(c: Complex, u: Cover, universe: Sequence[Cover], exhaustive: bool = False,
              budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """pi(u) = pi(v) for every refinement v of u in ``universe``."""
    _check_cover(c, u)
    pi = pi1(c)
    du = spanier_generators(c, u, pi=pi)
    verdicts = []
    compared = 0
    for i, v in enumerate(universe):
        _check_cover(c, v)
        if not _refines_across(v, u):
            continue
        compared += 1
        dv = spanier_generators(c, v, pi=pi)
        # pi(v) <= pi(u) holds for refinements, so only the reverse can fail
        verdict = subgroup_contains(dv, du, budget)
        if verdict.is_no:
            return verdict.with_certificate(refinement=i, universe=len(universe))
        verdicts.append(verdict)
    result = conjunction(verdicts, compared=compared, universe=len(universe))
    if result.is_yes and not exhaustive:
        return Verdict.unknown(INCOMPLETE_UNIVERSE, compared=compared, universe=len(universe))
    return result


@dataclass(frozen=True, eq=False)
class SpApprox:
    """Star-cover approximation of the Spanier group ``pi^sp``."""

    data: NormalSubgroupData
    stabilized: bool
    depth: int
    levels: tuple[NormalSubgroupData, ...]
    complexes: tuple[Complex, ...]
    witness_depth: int
    comparison: Verdict | None

    @property
    def witness_cover(self) -> Cover:
        return star_cover(self.complexes[self.witness_depth])

    def to_dict(self) -> dict:
        return {"depth": self.depth, "stabilized": self.stabilized,
                "witness_depth": self.witness_depth,
                "levels": [len(d.words) for d in self.levels],
                "comparison": self.comparison.to_dict() if self.comparison else None,
                "spanier": self.data.to_dict()}


def spanier_sp_approx(c: Complex, depth: int = 3, budget: Budget = DEFAULT_BUDGET) -> SpApprox:
    """Spanier groups of star covers of ``subdivide^k(c)`` for ``k = 0..depth``.

    Stabilized means the last two levels are certified equal. The witness
    depth is the smallest level from which every later level equals the last.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    pi = pi1(c)
    complexes = [c]
    for _ in range(depth):
        complexes.append(subdivide(complexes[-1]))
    levels = []
    for k, x in enumerate(complexes):
        d = translate(_own_generators(star_cover(x), f"star cover at depth {k}"), pi)
        levels.append(d)
    last = levels[-1]
    comparison = None
    stabilized = False
    witness = depth
    if depth >= 1:
        comparison = conjunction([subgroup_contains(levels[-2], last, budget),
                                  subgroup_contains(last, levels[-2], budget)])
        stabilized = comparison.is_yes
        if stabilized:
            witness = depth - 1
            while witness > 0:
                prev = levels[witness - 1]
                if not (subgroup_contains(last, prev, budget).is_yes
                        and subgroup_contains(prev, last, budget).is_yes):
                    break
                witness -= 1
    return SpApprox(last, stabilized, depth, tuple(levels), tuple(complexes), witness, comparison)


def change_basepoint(d: NormalSubgroupData, path: Word) -> NormalSubgroupData:
    """Conjugate by ``path`` (from the current basepoint to a new one)."""
    c = d.pi1.complex
    end = c.path_end(c.basepoint, path)
    new_pi = _pi1(c.with_basepoint(end))
    loops, words = [], []
    for loop in d.loops:
        edges = (~path * loop.edges * path).reduced()
        loops.append(EdgeLoop(end, edges))
        words.append(new_pi.path_to_word(edges))
    keep = [i for i, w in enumerate(words) if w]
    return NormalSubgroupData(new_pi, tuple(words[i] for i in keep), tuple(loops[i] for i in keep),
                              d.label, tuple(d.provenance[i] for i in keep) if d.provenance else ())


__all__ = [
    "NormalSubgroupData", "Pi1Data", "SpApprox", "change_basepoint", "pi1", "pi_stable",
    "spanier_contains", "spanier_equal", "spanier_generators", "spanier_sp_approx",
    "subgroup_contains", "translate",
]
