"""One-point unions: loop decomposition, generation checks and cover transfer."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .complex import (Complex, Cover, EdgeLoop, Origin, Subcomplex, _wedge_with_maps,
                      carrier_in, descends_from, lift_cover, push_path, validate)
from .covering import UniversalResult, universal_covering
from .errors import LoopOutsideError, NotBasedError, NotCoverError
from .fpgroup import DEFAULT_BUDGET, Budget, Quotient, Verdict, Word, conjunction
from .spanier import pi1, spanier_equal, spanier_sp_approx

DEGENERATE_FAMILY = ("the U1 v U2 generator family is degenerate: edge paths meet the "
                     "wedge point at discrete times, so two factor families suffice")


@dataclass(frozen=True, eq=False)
class WedgeComplex:
    complex: Complex
    factors: tuple[Complex, Complex]
    maps: tuple[Mapping[str, str], Mapping[str, str]]

    @property
    def basepoint(self) -> str:
        return self.complex.basepoint

    def factor_of(self, cell: str) -> int | None:
        return self.complex.tags.get(cell)

    def inverse_map(self, i: int) -> dict[str, str]:
        return {v: k for k, v in self.maps[i - 1].items()}


def make_wedge(c1: Complex, c2: Complex) -> WedgeComplex:
    validate(c1)
    validate(c2)
    w, m1, m2 = _wedge_with_maps(c1, c2)
    return WedgeComplex(w, (c1, c2), (m1, m2))


def _rename(path: Word, m: Mapping[str, str]) -> Word:
    return Word(tuple((m[e], s) for e, s in path))


def _vertex_down(c: Complex, v: str, ancestor: Complex) -> str:
    while c is not ancestor and c != ancestor:
        v = c.origin.vertex_image[v]
        c = c.origin.parent
    return v


def wedge_of_subdivisions(w: WedgeComplex, d1: Complex, d2: Complex) -> WedgeComplex:
    """Wedge of subdivisions of the factors, linked back to ``w.complex``."""
    for d, f in ((d1, w.factors[0]), (d2, w.factors[1])):
        if not descends_from(d, f):
            raise NotCoverError("cover does not live on the factor or a subdivision of it")
    inner = make_wedge(d1, d2)
    vimg, eimg, carrier = {}, {}, {}
    for i, (d, f) in enumerate(((d1, w.factors[0]), (d2, w.factors[1]))):
        new, old = inner.maps[i], w.maps[i]
        for v in d.vertices:
            vimg[new[v]] = old[_vertex_down(d, v, f)]
        for e in d.edges:
            eimg[new[e]] = _rename(push_path(d, Word(((e, 1),)), f), old)
        for x in d.whole().cells:
            carrier[new[x]] = old[carrier_in(d, x, f)]
    c = inner.complex
    linked = Complex(c.vertices, c.edges, c.faces, c.basepoint, c.tags,
                     Origin(w.complex, vimg, eimg, carrier))
    return WedgeComplex(linked, (d1, d2), inner.maps)


def wedge_decompose_loop(w: WedgeComplex, loop: EdgeLoop) -> list[EdgeLoop]:
    """Split at the wedge point and merge consecutive pieces from the same factor."""
    if loop.base != w.basepoint:
        raise NotBasedError(f"loop is based at {loop.base!r}, not at {w.basepoint!r}")
    loop.check(w.complex)
    c = w.complex
    segments: list[list] = []
    current: list = []
    v = loop.base
    for letter in loop.edges:
        current.append(letter)
        v = c.tgt(letter)
        if v == w.basepoint:
            segments.append(current)
            current = []
    pieces: list[tuple[int, list]] = []
    for seg in segments:
        tag = w.factor_of(seg[0][0])
        if pieces and pieces[-1][0] == tag:
            pieces[-1][1].extend(seg)
        else:
            pieces.append((tag, list(seg)))
    return [EdgeLoop(w.basepoint, Word(tuple(p))) for _, p in pieces]


def random_loop(c: Complex, length: int, rng: random.Random) -> EdgeLoop:
    """A random walk of ``length`` steps closed up through the BFS tree."""
    pi = pi1(c)
    v = c.basepoint
    path = []
    for _ in range(length):
        options = c.incident(v)
        if not options:
            break
        letter = rng.choice(options)
        path.append(letter)
        v = c.tgt(letter)
    edges = Word(tuple(path)) * ~pi.tree_path(v)
    return EdgeLoop(c.basepoint, edges)


@dataclass(frozen=True)
class GenerationReport:
    verdict: Verdict
    samples: int
    pieces: int
    trivial_pieces: int

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.to_dict(), "samples": self.samples,
                "pieces": self.pieces, "trivial_pieces": self.trivial_pieces,
                "note": DEGENERATE_FAMILY}


def pi1_generation_check(w: WedgeComplex, samples: int = 50, max_length: int = 12,
                         seed: int = 0, budget: Budget = DEFAULT_BUDGET) -> GenerationReport:
    """Each sampled loop equals the product of its factor pieces pushed into the wedge."""
    rng = random.Random(seed)
    wpi = pi1(w.complex)
    fpis = [pi1(f) for f in w.factors]
    q = Quotient(wpi.presentation, (), budget)
    fq = [Quotient(p.presentation, (), budget) for p in fpis]
    inverse = [w.inverse_map(1), w.inverse_map(2)]
    verdicts = []
    total_pieces = trivial = 0
    for _ in range(samples):
        loop = random_loop(w.complex, rng.randint(0, max_length), rng)
        product = Word()
        for piece in wedge_decompose_loop(w, loop):
            i = w.factor_of(piece.edges[0][0])
            local = _rename(piece.edges, inverse[i - 1])
            fw = fpis[i - 1].path_to_word(local)
            total_pieces += 1
            if fq[i - 1].is_trivial(fw).is_yes:
                trivial += 1
            back = _rename(fpis[i - 1].word_to_loop(fw).edges, w.maps[i - 1])
            product = product * wpi.path_to_word(back)
        verdicts.append(q.is_trivial((wpi.path_to_word(loop.edges) * ~product).reduced()))
    return GenerationReport(conjunction(verdicts), samples, total_pieces, trivial)


@dataclass(frozen=True)
class InclusionReport:
    in_subspace: Verdict
    in_space: Verdict
    status: str

    @property
    def violated(self) -> bool:
        return self.status == "violated"

    def to_dict(self) -> dict:
        return {"in_subspace_pi_sp": self.in_subspace.to_dict(),
                "in_space_pi_sp": self.in_space.to_dict(), "status": self.status}


def subspace_spanier_inclusion(c: Complex, y: Subcomplex, loop: EdgeLoop, depth: int = 3,
                               budget: Budget = DEFAULT_BUDGET) -> InclusionReport:
    """Instance of: a loop in ``pi^sp`` of a subspace lies in ``pi^sp`` of the space."""
    if loop.base not in y.vertices:
        raise LoopOutsideError(f"basepoint {loop.base!r} is not in the subcomplex")
    outside = sorted({e for e, _ in loop.edges} - y.edges)
    if outside:
        raise LoopOutsideError(f"loop uses edges outside the subcomplex: {outside}")
    c = c.with_basepoint(loop.base)
    loop.check(c)
    comp = next(k for k in y.components(c) if loop.base in k.vertices)
    sub = c.restrict(comp, loop.base)
    verdicts = []
    for space in (sub, c):
        approx = spanier_sp_approx(space, depth, budget)
        word = approx.data.pi1.path_to_word(loop.edges)
        verdicts.append(approx.data.quotient(budget).is_trivial(word))
    first, second = verdicts
    if first.is_yes and second.is_no:
        status = "violated"
    elif not first.is_yes and not first.is_unknown:
        status = "consistent (premise fails)"
    elif first.is_yes and second.is_yes:
        status = "consistent"
    else:
        status = "undetermined"
    return InclusionReport(first, second, status)


def t3_transfer(w: WedgeComplex, u1: Cover, u2: Cover) -> Cover:
    """Cover of the wedge: basepoint pieces of both factors merge into one element.

    A basepoint piece is an element holding the basepoint in its interior,
    i.e. containing every cell incident to it; elements that merely touch the
    basepoint on their boundary pass through like the others.

    When the covers live on subdivisions of the factors, the result covers the
    wedge of those subdivisions, which is linked back to ``w.complex``.
    """
    if u1.complex is w.factors[0] and u2.complex is w.factors[1]:
        target = w
    else:
        target = wedge_of_subdivisions(w, u1.complex, u2.complex)
    elements, names = [], []
    merged = Subcomplex()
    merged_names = []
    for i, u in enumerate((u1, u2)):
        m = target.maps[i]
        around = u.complex.star(u.complex.basepoint)
        for el, name in zip(u, u.names):
            image = Subcomplex(frozenset(m[x] for x in el.vertices),
                               frozenset(m[x] for x in el.edges),
                               frozenset(m[x] for x in el.faces))
            if around <= el:
                merged = merged | image
                merged_names.append(f"{i + 1}:{name}")
            else:
                elements.append(image)
                names.append(f"{i + 1}:{name}")
    if merged:
        elements.append(merged)
        names.append(" v ".join(merged_names))
    return Cover(target.complex, tuple(elements), tuple(names))


@dataclass(frozen=True, eq=False)
class T3Report:
    factor1: UniversalResult
    factor2: UniversalResult
    wedge: UniversalResult
    transfer: Cover
    transfer_matches: Verdict
    violation: bool

    def succeeded(self, r: UniversalResult) -> bool:
        return r.approx.stabilized and r.certificate["witness_equals_pi_sp"]["answer"] == "YES"

    def to_dict(self) -> dict:
        return {
            "factor1": {**self.factor1.to_dict(), "succeeded": self.succeeded(self.factor1)},
            "factor2": {**self.factor2.to_dict(), "succeeded": self.succeeded(self.factor2)},
            "wedge": {**self.wedge.to_dict(), "succeeded": self.succeeded(self.wedge)},
            "transfer_witness": {"elements": list(self.transfer.names),
                                 "equals_wedge_pi_sp": self.transfer_matches.to_dict()},
            "biconditional_violated": self.violation,
            "note": DEGENERATE_FAMILY,
        }


def _witness_at(result: UniversalResult, depth: int) -> Cover:
    approx = result.approx
    cover = approx.witness_cover
    return lift_cover(cover, approx.complexes[depth]) if depth != approx.witness_depth else cover


def t3_check(c1: Complex, c2: Complex, depth: int = 3, budget: Budget = DEFAULT_BUDGET,
             radius: int = 4) -> T3Report:
    """Universal coverings of both factors and of their wedge, with the witness transfer."""
    w = make_wedge(c1, c2)
    r1 = universal_covering(c1, depth, budget, radius)
    r2 = universal_covering(c2, depth, budget, radius)
    rw = universal_covering(w.complex, depth, budget, radius)
    k = max(r1.approx.witness_depth, r2.approx.witness_depth)
    transfer = t3_transfer(w, _witness_at(r1, k), _witness_at(r2, k))
    matches = spanier_equal(w.complex, transfer, rw.approx.data, budget)
    report = T3Report(r1, r2, rw, transfer, matches, False)
    both = report.succeeded(r1) and report.succeeded(r2)
    violation = both != report.succeeded(rw) or (both and matches.is_no)
    return T3Report(r1, r2, rw, transfer, matches, violation)


__all__ = [
    "GenerationReport", "InclusionReport", "T3Report", "WedgeComplex", "make_wedge",
    "pi1_generation_check", "random_loop", "subspace_spanier_inclusion", "t3_check",
    "t3_transfer", "wedge_decompose_loop", "wedge_of_subdivisions",
]
