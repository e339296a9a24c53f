"""Finite stages of shrinking-circle spaces and classification of their basepoint.

Circle ``k`` of a stage is the pair of edges ``_a<k>: x -> m<k>`` and
``a<k>: m<k> -> x``. The first edge lies in the breadth-first tree, so the
group generator attached to circle ``k`` is ``a<k>``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .complex import Complex, Cover, EdgeLoop, Subcomplex, _wedge_with_maps, validate
from .covering import universal_covering
from .errors import CoverableError
from .fpgroup import DEFAULT_BUDGET, Budget, Quotient, Verdict, Word, simplify
from .spanier import NormalSubgroupData, Pi1Data, _component_complex, _pi1, spanier_generators

KINDS = ("hawaiian", "archipelago", "cone", "double_cone")
BASE = "x"


@dataclass(frozen=True)
class CellMap:
    """Cell map between stages: edges go to edge paths, faces to faces or nothing."""

    vertices: Mapping[str, str]
    edges: Mapping[str, Word]
    faces: Mapping[str, str | None]

    def path(self, w: Word) -> Word:
        out = Word()
        for e, s in w:
            out = out * (self.edges[e] if s == 1 else ~self.edges[e])
        return out.reduced()


@dataclass(frozen=True, eq=False)
class Tower:
    """Stages ``X_1 .. X_n``, bonding maps ``X_{j+1} -> X_j`` and neighbourhoods.

    ``stages[j - 1]`` is ``X_j``; ``bonds[j - 1]`` maps ``X_{j+1}`` to ``X_j``;
    ``filtration[j - 1][k - 1]`` is ``N_k`` inside ``X_j``.
    """

    kind: str
    stages: tuple[Complex, ...]
    bonds: tuple[CellMap, ...]
    filtration: tuple[tuple[Subcomplex, ...], ...]

    @property
    def height(self) -> int:
        return len(self.stages)

    def stage(self, n: int) -> Complex:
        if not 1 <= n <= self.height:
            raise CoverableError(f"stage {n} outside 1..{self.height}")
        return self.stages[n - 1]

    def neighbourhood(self, n: int, k: int) -> Subcomplex:
        if not 1 <= k <= n:
            raise CoverableError(f"neighbourhood index {k} outside 1..{n}")
        self.stage(n)
        return self.filtration[n - 1][k - 1]


def _circles(n: int):
    vertices = [BASE] + [f"m{k}" for k in range(1, n + 1)]
    edges = {}
    for k in range(1, n + 1):
        edges[f"_a{k}"] = (BASE, f"m{k}")
        edges[f"a{k}"] = (f"m{k}", BASE)
    return vertices, edges


def _circle_word(k: int) -> Word:
    return Word(((f"_a{k}", 1), (f"a{k}", 1)))


def _single_stage(kind: str, n: int) -> Complex:
    vertices, edges = _circles(n)
    faces: dict[str, Word] = {}
    if kind == "archipelago":
        for k in range(1, n):
            faces[f"f{k}"] = _circle_word(k) * ~_circle_word(k + 1)
    elif kind == "cone":
        for k in range(1, n + 1):
            faces[f"c{k}"] = _circle_word(k)
    return Complex(tuple(vertices), edges, faces, BASE)


def _single_neighbourhood(c: Complex, k: int) -> Subcomplex:
    """Full subcomplex on circles ``k..``."""
    vs = {BASE} | {v for v in c.vertices if v.startswith("m") and int(v[1:]) >= k}
    es = {e for e, (s, t) in c.edges.items() if s in vs and t in vs}
    fs = {f for f, b in c.faces.items() if all(e in es for e, _ in b)}
    return Subcomplex(frozenset(vs), frozenset(es), frozenset(fs))


def _single_bond(kind: str, n: int) -> CellMap:
    """``X_{n+1} -> X_n``: circle ``n+1`` collapses, or folds onto circle ``n``.

    Collapsing is impossible for the archipelago, whose last face would have
    to map onto circle ``n``; there circle ``n+1`` maps onto circle ``n`` and
    that face degenerates.
    """
    vertices = {BASE: BASE}
    edges: dict[str, Word] = {}
    faces: dict[str, str | None] = {}
    for k in range(1, n + 1):
        vertices[f"m{k}"] = f"m{k}"
        edges[f"_a{k}"] = Word(((f"_a{k}", 1),))
        edges[f"a{k}"] = Word(((f"a{k}", 1),))
    last = n + 1
    if kind == "archipelago":
        vertices[f"m{last}"] = f"m{n}"
        edges[f"_a{last}"] = Word(((f"_a{n}", 1),))
        edges[f"a{last}"] = Word(((f"a{n}", 1),))
        for k in range(1, n):
            faces[f"f{k}"] = f"f{k}"
        faces[f"f{n}"] = None
    else:
        vertices[f"m{last}"] = BASE
        edges[f"_a{last}"] = Word()
        edges[f"a{last}"] = Word()
        if kind == "cone":
            for k in range(1, n + 1):
                faces[f"c{k}"] = f"c{k}"
            faces[f"c{last}"] = None
    return CellMap(vertices, edges, faces)


def _double(cm: CellMap, m1: Mapping[str, str], m2: Mapping[str, str],
            n1: Mapping[str, str], n2: Mapping[str, str]) -> CellMap:
    """Apply ``cm`` to both factors of a wedge (``m*`` upper ids, ``n*`` lower ids)."""
    vertices, edges, faces = {}, {}, {}
    for up, low in ((m1, n1), (m2, n2)):
        for v, img in cm.vertices.items():
            vertices[up[v]] = low[img]
        for e, img in cm.edges.items():
            edges[up[e]] = Word(tuple((low[x], s) for x, s in img))
        for f, img in cm.faces.items():
            faces[up[f]] = None if img is None else low[img]
    return CellMap(vertices, edges, faces)


def builtin_tower(kind: str, n: int) -> Tower:
    if kind not in KINDS:
        raise CoverableError(f"unknown tower kind {kind!r}; choose from {', '.join(KINDS)}")
    if n < 1:
        raise CoverableError("tower height must be at least 1")
    single = "cone" if kind == "double_cone" else kind
    stages, bonds, filtration, maps = [], [], [], []
    for j in range(1, n + 1):
        s = _single_stage(single, j)
        if kind == "double_cone":
            w, m1, m2 = _wedge_with_maps(s, s)
            stages.append(w)
            maps.append((m1, m2))
            level = []
            for k in range(1, j + 1):
                nb = _single_neighbourhood(s, k)
                level.append(Subcomplex(frozenset(m1[x] for x in nb.vertices) | frozenset(m2[x] for x in nb.vertices),
                                        frozenset(m1[x] for x in nb.edges) | frozenset(m2[x] for x in nb.edges),
                                        frozenset(m1[x] for x in nb.faces) | frozenset(m2[x] for x in nb.faces)))
            filtration.append(tuple(level))
        else:
            stages.append(s)
            filtration.append(tuple(_single_neighbourhood(s, k) for k in range(1, j + 1)))
    for j in range(1, n):
        cm = _single_bond(single, j)
        if kind == "double_cone":
            cm = _double(cm, *maps[j], *maps[j - 1])
        bonds.append(cm)
    for s in stages:
        validate(s)
    return Tower(kind, tuple(stages), tuple(bonds), tuple(filtration))


def check_bond(t: Tower, n: int) -> None:
    """Raise if ``bonds[n-1]`` is not a basepoint-preserving cell map."""
    upper, lower, cm = t.stage(n + 1), t.stage(n), t.bonds[n - 1]
    if cm.vertices[upper.basepoint] != lower.basepoint:
        raise CoverableError("bonding map moves the basepoint")
    for e, (s, v) in upper.edges.items():
        if lower.path_end(cm.vertices[s], cm.edges[e]) != cm.vertices[v]:
            raise CoverableError(f"edge {e} does not map to a path between its endpoint images")
    for f, b in upper.faces.items():
        image = cm.path(b)
        target = cm.faces[f]
        if target is None:
            if image.cyclically_reduced():
                raise CoverableError(f"face {f} degenerates but its boundary image {image} is not trivial")
        else:
            tb = lower.faces[target]
            rots = {tb.letters[i:] + tb.letters[:i] for i in range(len(tb))}
            if image.letters not in rots:
                raise CoverableError(f"face {f} boundary does not map onto face {target}")
    for k in range(1, n + 1):
        nb_up, nb_low = t.neighbourhood(n + 1, k), t.neighbourhood(n, k)
        for e in nb_up.edges:
            if any(x not in nb_low.edges for x, _ in cm.edges[e]):
                raise CoverableError(f"bonding map sends N_{k} outside N_{k}")


def stage_cover(t: Tower, n: int, k: int) -> Cover:
    """``N_k`` plus arcs of the outer circles and closures of the outer faces."""
    c = t.stage(n)
    nb = t.neighbourhood(n, k)
    elements = [nb]
    names = [f"N{k}"]
    for e in c.edges:
        if e not in nb.edges:
            elements.append(c.closure([e]))
            names.append(f"arc({e})")
    for f in c.faces:
        if f not in nb.faces:
            elements.append(c.closure([f]))
            names.append(f"cl({f})")
    return Cover(c, tuple(elements), tuple(names))


def stage_spanier(t: Tower, n: int, k: int) -> NormalSubgroupData:
    return spanier_generators(t.stage(n), stage_cover(t, n, k), f"stage {n}, level {k}")


def neighbourhood_loops(t: Tower, n: int, k: int) -> list[EdgeLoop]:
    """Generator loops of ``pi_1(N_k)`` as loops in ``X_n``."""
    c = t.stage(n)
    local = _pi1(_component_complex(c, t.neighbourhood(n, k), c.basepoint))
    simple, _ = simplify(local.presentation)
    return [local.word_to_loop(Word(((g, 1),))) for g in simple.generators]


def bonding_image(t: Tower, n: int, d: NormalSubgroupData, pi: Pi1Data) -> tuple[Word, ...]:
    """Words of ``pi_1(X_n)`` for the images of ``d``'s loops (``d`` on ``X_{n+1}``)."""
    cm = t.bonds[n - 1]
    return tuple(pi.path_to_word(cm.path(loop.edges)) for loop in d.loops)


class PointClass(enum.Enum):
    REGULAR = "REGULAR"
    TAME = "TAME"
    WILD = "WILD"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Classification:
    point_class: PointClass
    scale: int
    evidence: tuple[dict, ...]
    rule: str = ("scales k = 1..n-1; REGULAR if some N_k has only nullhomotopic loops; WILD if "
                 "every scale has a loop with a certified non-member of some level m; TAME if "
                 "non-regular and some scale has every loop in every level m <= n")

    def to_dict(self) -> dict:
        return {"class": self.point_class.value, "scale": f"at tower scale n={self.scale}",
                "rule": self.rule, "evidence": list(self.evidence)}


def classify_basepoint(t: Tower, n: int, budget: Budget = DEFAULT_BUDGET) -> Classification:
    if n < 2:
        raise CoverableError("classification needs a stage n >= 2")
    c = t.stage(n)
    pi = _pi1(c)
    ambient = Quotient(pi.presentation, (), budget)
    levels = {m: stage_spanier(t, n, m) for m in range(1, n + 1)}
    quotients = {m: levels[m].quotient(budget) for m in levels}
    evidence = []
    regular_at = tame_at = None
    wild_everywhere = True
    for k in range(1, n):
        loops = neighbourhood_loops(t, n, k)
        rows = []
        all_null = True
        all_eventual = True
        wild_here = False
        for loop in loops:
            word = pi.path_to_word(loop.edges)
            null = ambient.is_trivial(word)
            row = {"loop": str(loop.edges), "word": str(word), "nullhomotopic": null.to_dict()}
            all_null &= null.is_yes
            if not null.is_yes:
                per_m = {}
                for m in range(1, n + 1):
                    v = quotients[m].is_trivial(word)
                    per_m[m] = v.to_dict()
                    if v.is_no:
                        wild_here = True
                        all_eventual = False
                        break
                    if v.is_unknown:
                        all_eventual = False
                row["levels"] = per_m
            rows.append(row)
        evidence.append({"k": k, "loops": rows, "regular": all_null,
                         "eventually_spanier": all_eventual, "certified_outside": wild_here})
        if all_null and regular_at is None:
            regular_at = k
        if all_eventual and tame_at is None:
            tame_at = k
        wild_everywhere &= wild_here
    if regular_at is not None:
        cls = PointClass.REGULAR
    elif wild_everywhere:
        cls = PointClass.WILD
    elif tame_at is not None:
        cls = PointClass.TAME
    else:
        cls = PointClass.UNKNOWN
    return Classification(cls, n, tuple(evidence))


LIMIT_NOTES = {
    "double_cone": ("limit object: the double cone over the shrinking-circle wedge is known to "
                    "have no simply connected universal covering; recorded, not computed"),
}


def coverability_report(t: Tower, n: int, budget: Budget = DEFAULT_BUDGET, depth: int = 3,
                        radius: int = 4) -> dict:
    cls = classify_basepoint(t, n, budget)
    if cls.point_class is PointClass.WILD:
        verdict = "LIMIT-NOT-COVERABLE"
        reason = "a wild point rules out a semi-locally Spanier limit, hence coverability"
    elif cls.point_class in (PointClass.TAME, PointClass.REGULAR):
        verdict = "LIMIT-COVERABLE-EVIDENCE"
        reason = "finite-stage evidence only; the limit itself is not computed"
    else:
        verdict = "UNDETERMINED"
        reason = "budget exhausted before the classification settled"
    stage = universal_covering(t.stage(n), depth, budget, radius)
    report = {
        "kind": t.kind, "n": n, "verdict": verdict, "reason": reason,
        "classification": cls.to_dict(),
        "stage_certificate": {"stage_coverable": True,
                              "universal_covering": stage.to_dict()},
        "caveat": "a finite stage can only give evidence about the limit space",
    }
    if t.kind in LIMIT_NOTES:
        report["limit_note"] = LIMIT_NOTES[t.kind]
    return report


__all__ = [
    "CellMap", "Classification", "KINDS", "PointClass", "Tower", "bonding_image",
    "builtin_tower", "check_bond", "classify_basepoint", "coverability_report",
    "neighbourhood_loops", "stage_cover", "stage_spanier",
]
