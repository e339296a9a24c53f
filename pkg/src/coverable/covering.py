"""Covering complexes built from coset actions, and checks on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Sequence

from .complex import Complex, Cover, Subcomplex, star_cover, subdivide, validate
from .errors import (BudgetError, EdgeLiftError, FaceLiftError, FiberError, TruncatedError)
from .fpgroup import (DEFAULT_BUDGET, AbelianQuotient, Budget, CosetTable, Quotient,
                      SubgroupGraph, Verdict, Word, conjunction, same_subgroup, simplify,
                      todd_coxeter)
from .spanier import Pi1Data, SpApprox, pi1, spanier_generators, spanier_sp_approx, subgroup_contains

# enumeration attempted before falling back to a truncated ball
BALL_PROBE_COSETS = 5000


@dataclass(frozen=True, eq=False)
class CoveringMap:
    total: Complex
    base: Complex
    projection: Mapping[str, str]
    basepoint_lift: str
    sheets: int | None
    radius: int | None = None
    truncated: bool = False
    subgroup_gens: tuple[Word, ...] = ()
    normal: bool = False
    table: CosetTable | None = field(default=None, repr=False)

    def fibers(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {x: [] for x in self.base.whole().cells}
        for x, y in self.projection.items():
            out.setdefault(y, []).append(x)
        return out

    def to_dict(self) -> dict:
        return {"sheets": self.sheets, "truncated": self.truncated, "radius": self.radius,
                "total_cells": list(self.total.counts), "base_cells": list(self.base.counts),
                "basepoint_lift": self.basepoint_lift,
                "subgroup": [str(w) for w in self.subgroup_gens], "normal": self.normal}


def _check_words(pi: Pi1Data, words: Sequence[Word]) -> tuple[Word, ...]:
    out = []
    for w in words:
        pi.presentation.check_word(w)
        out.append(w.reduced())
    return tuple(out)


def _from_action(c: Complex, pi: Pi1Data, n: int, perms: Mapping[str, Sequence[int]],
                 h: tuple[Word, ...], normal: bool, table: CosetTable | None) -> CoveringMap:
    """Covering whose sheet ``i`` over ``v`` ends the lift of ``tree(v)`` from sheet ``i``."""
    ident = list(range(n))
    fwd = {e: list(perms.get(e, ident)) for e in c.edges}
    inv = {}
    for e, p in fwd.items():
        q = [0] * n
        for i, j in enumerate(p):
            q[j] = i
        inv[e] = q
    vertices = tuple(f"{v}@{i}" for i in range(n) for v in c.vertices)
    edges, faces, proj = {}, {}, {}
    for v in c.vertices:
        for i in range(n):
            proj[f"{v}@{i}"] = v
    for e, (u, v) in c.edges.items():
        for i in range(n):
            edges[f"{e}@{i}"] = (f"{u}@{i}", f"{v}@{fwd[e][i]}")
            proj[f"{e}@{i}"] = e
    for f, b in c.faces.items():
        for i in range(n):
            sheet = i
            letters = []
            for e, sign in b:
                if sign == 1:
                    letters.append((f"{e}@{sheet}", 1))
                    sheet = fwd[e][sheet]
                else:
                    sheet = inv[e][sheet]
                    letters.append((f"{e}@{sheet}", -1))
            faces[f"{f}@{i}"] = Word(tuple(letters))
            proj[f"{f}@{i}"] = f
    total = Complex(vertices, edges, faces, f"{c.basepoint}@0")
    return CoveringMap(total, c, proj, total.basepoint, n, None, False, h, normal, table)


def _table_for(pi: Pi1Data, h: Sequence[Word], normal: bool, max_cosets: int) -> CosetTable:
    p = pi.presentation
    if normal:
        return todd_coxeter(p.with_relators(h), (), max_cosets)
    return todd_coxeter(p, h, max_cosets)


def build_covering(c: Complex, h_gens: Sequence[Word], budget: Budget = DEFAULT_BUDGET,
                   normal: bool = False) -> CoveringMap:
    """The covering with image ``<h_gens>`` (or its normal closure when ``normal``)."""
    validate(c)
    pi = pi1(c)
    h = _check_words(pi, h_gens)
    table = _table_for(pi, h, normal, budget.cosets)
    if not table.complete:
        raise BudgetError(f"coset enumeration exceeded {budget.cosets} cosets")
    perms = {g: table.permutation(g) for g in table.generators}
    return _from_action(c, pi, table.index, perms, h, normal, table)


def _membership_oracle(pi: Pi1Data, h: tuple[Word, ...], normal: bool, budget: Budget,
                       q: Quotient | None = None) -> Callable[[Word], bool]:
    """Exact test for ``w in H`` (or in its normal closure) where one is available."""
    p = pi.presentation
    if normal or not h:
        q = q or Quotient(p, h, budget)

        def member(w: Word) -> bool:
            v = q.is_trivial(w)
            if v.is_unknown:
                raise BudgetError(f"could not decide whether {w} is trivial in the quotient")
            return v.is_yes
        return member
    simple, images = simplify(p)
    if any(simple.relators):
        raise BudgetError("subgroup membership in a non-free group is only decided at finite index")
    graph = SubgroupGraph([w.substitute(images).reduced() for w in h], simple.generators)
    return lambda w: graph.accepts(w.substitute(images).reduced())


def ball_covering(c: Complex, h_gens: Sequence[Word], radius: int,
                  budget: Budget = DEFAULT_BUDGET, normal: bool = False) -> CoveringMap:
    """The covering for ``H``, truncated to a ball of ``radius`` edges.

    When the index is small enough to enumerate, the full covering is returned
    instead and is not flagged as truncated.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    validate(c)
    pi = pi1(c)
    h = _check_words(pi, h_gens)
    probe_finite = True
    if normal or not h:
        probe_finite = AbelianQuotient(pi.presentation, h).invariants.is_finite
    if probe_finite:
        table = _table_for(pi, h, normal, min(budget.cosets, BALL_PROBE_COSETS))
        if table.complete:
            perms = {g: table.permutation(g) for g in table.generators}
            return _from_action(c, pi, table.index, perms, h, normal, table)
    quotient = Quotient(pi.presentation, h, budget) if normal or not h else None
    # a canonical form turns identification into hashing
    key_of = quotient.normal_form if quotient and quotient.normal_form(Word()) is not None else None
    member = _membership_oracle(pi, h, normal, budget, quotient)
    cache: dict[Word, bool] = {}
    by_key: dict[tuple, int] = {}

    def same(w1: Word, w2: Word) -> bool:
        w = (w1 * ~w2).reduced()
        if w not in cache:
            cache[w] = cache[~w] = member(w)
        return cache[w]

    nodes: list[tuple[str, Word]] = [(c.basepoint, Word())]
    if key_of is not None:
        by_key[(c.basepoint, key_of(Word()))] = 0
    dist = [0]
    at: dict[str, list[int]] = {c.basepoint: [0]}
    out_edge: dict[tuple[str, int], int] = {}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        if dist[k] >= radius:
            continue
        v, w = nodes[k]
        for letter in c.incident(v):
            t = c.tgt(letter)
            w2 = (w * pi.path_to_word(Word((letter,)))).reduced()
            if key_of is not None:
                key = (t, key_of(w2))
                j = by_key.get(key)
            else:
                j = next((i for i in at.get(t, []) if same(w2, nodes[i][1])), None)
            if j is None:
                j = len(nodes)
                if key_of is not None:
                    by_key[key] = j
                nodes.append((t, w2))
                dist.append(dist[k] + 1)
                at.setdefault(t, []).append(j)
                queue.append(j)
            e, sign = letter
            if sign == 1:
                out_edge[(e, k)] = j
            else:
                out_edge[(e, j)] = k
    into = {(e, t): s for (e, s), t in out_edge.items()}
    vertices = tuple(f"{v}@{i}" for i, (v, _) in enumerate(nodes))
    proj = {f"{v}@{i}": v for i, (v, _) in enumerate(nodes)}
    edges = {}
    for (e, s), t in out_edge.items():
        edges[f"{e}@{s}"] = (f"{nodes[s][0]}@{s}", f"{nodes[t][0]}@{t}")
        proj[f"{e}@{s}"] = e
    faces = {}
    for f, b in c.faces.items():
        start = c.face_start(f)
        for k in at.get(start, []):
            cur, letters = k, []
            for e, sign in b:
                if sign == 1:
                    nxt = out_edge.get((e, cur))
                    if nxt is None:
                        break
                    letters.append((f"{e}@{cur}", 1))
                else:
                    nxt = into.get((e, cur))
                    if nxt is None:
                        break
                    letters.append((f"{e}@{nxt}", -1))
                cur = nxt
            else:
                if cur == k:
                    faces[f"{f}@{k}"] = Word(tuple(letters))
                    proj[f"{f}@{k}"] = f
    total = Complex(vertices, edges, faces, f"{c.basepoint}@0")
    return CoveringMap(total, c, proj, total.basepoint, None, radius, True, h, normal)


def _distances(c: Complex, start: str) -> dict[str, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for letter in c.incident(v):
            t = c.tgt(letter)
            if t not in dist:
                dist[t] = dist[v] + 1
                queue.append(t)
    return dist


def _rotations(w: Word):
    return {w.letters[i:] + w.letters[:i] for i in range(len(w))}


def verify_covering(m: CoveringMap) -> None:
    """Raise a :class:`~coverable.errors.CoveringError` on the first violated invariant."""
    total, base, proj = m.total, m.base, m.projection
    cells = total.whole().cells
    unmapped = sorted(x for x in cells if x not in proj)
    if unmapped:
        raise FiberError("cells without a projection", unmapped)
    for x in sorted(cells):
        if base.kind(proj[x]) != total.kind(x):
            raise FiberError("projection changes cell dimension", [x])
    if proj[m.basepoint_lift] != base.basepoint:
        raise FiberError("basepoint lift is not over the basepoint", [m.basepoint_lift])
    for e, (s, t) in total.edges.items():
        be = proj[e]
        if (proj[s], proj[t]) != base.edges[be]:
            raise EdgeLiftError("edge does not lie over its projection", [e])
    fibers = m.fibers()
    if not m.truncated:
        for v in base.vertices:
            if len(fibers[v]) != m.sheets:
                raise FiberError(f"fiber has {len(fibers[v])} points, expected {m.sheets}", [v])
        for x in base.whole().cells:
            if len(fibers.get(x, [])) != m.sheets:
                raise FiberError(f"cell has {len(fibers.get(x, []))} lifts", [x])
    interior = None
    if m.truncated:
        dist = _distances(total, m.basepoint_lift)
        interior = {v for v, d in dist.items() if d < (m.radius or 0)}
    for v in total.vertices:
        seen: dict[tuple[str, int], str] = {}
        for e, sign in total.incident(v):
            key = (proj[e], sign)
            if key in seen:
                raise EdgeLiftError("two lifts of one edge at a vertex", [seen[key], e])
            seen[key] = e
        if interior is None or v in interior:
            need = {(e, s) for e, s in base.incident(proj[v])}
            missing = need - set(seen)
            if missing:
                raise EdgeLiftError(f"edges {sorted(x[0] for x in missing)} do not lift at vertex",
                                    [v])
    for f, b in total.faces.items():
        image = Word(tuple((proj[e], s) for e, s in b))
        target = base.faces[proj[f]]
        if image.letters not in _rotations(target) or len(image) != len(target):
            raise FaceLiftError("face boundary does not lie over its projection", [f])
    if not m.truncated:
        _check_loop_lifting(m)


def _lift_path(m: CoveringMap, start: str, path: Word) -> str | None:
    v = start
    for e, sign in path:
        nxt = None
        for te, ts in m.total.incident(v):
            if ts == sign and m.projection[te] == e:
                nxt = m.total.tgt((te, ts))
                break
        if nxt is None:
            return None
        v = nxt
    return v


def _check_loop_lifting(m: CoveringMap) -> None:
    pi = pi1(m.base)
    for g in pi.presentation.generators:
        loop = pi.word_to_loop(Word(((g, 1),)))
        if _lift_path(m, m.basepoint_lift, loop.edges) is None:
            raise EdgeLiftError("generator loop does not lift", [g])


@dataclass(frozen=True)
class ImageResult:
    words: tuple[Word, ...]
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"generators": [str(w) for w in self.words], "equals_H": self.verdict.to_dict()}


def image_words(m: CoveringMap) -> tuple[Word, ...]:
    """Projections of the edge-path generators of the total space."""
    if m.truncated:
        raise TruncatedError("image subgroup of a truncated covering is not defined")
    total_pi = pi1(m.total.with_basepoint(m.basepoint_lift))
    base_pi = pi1(m.base)
    out = []
    for g in total_pi.presentation.generators:
        loop = total_pi.word_to_loop(Word(((g, 1),)))
        down = Word(tuple((m.projection[e], s) for e, s in loop.edges))
        out.append(base_pi.path_to_word(down))
    return tuple(out)


def image_subgroup(m: CoveringMap, budget: Budget = DEFAULT_BUDGET) -> ImageResult:
    """Generators of ``p_* pi_1`` and whether they generate the intended subgroup."""
    words = image_words(m)
    pi = pi1(m.base)
    if not m.base.faces and not m.normal:
        equal = same_subgroup(pi.presentation.generators, words, m.subgroup_gens)
        cert = {"method": "folding"}
        return ImageResult(words, Verdict.yes(**cert) if equal else Verdict.no(**cert))
    target = m.table or _table_for(pi, m.subgroup_gens, m.normal, budget.cosets)
    if not target.complete:
        return ImageResult(words, Verdict.unknown("budget", cosets=budget.cosets))
    outside = [str(w) for w in words if target.act(0, w) != 0]
    if outside:
        return ImageResult(words, Verdict.no(method="enumeration", outside=outside))
    mine = todd_coxeter(pi.presentation, words, budget.cosets)
    if not mine.complete:
        return ImageResult(words, Verdict.unknown("budget", cosets=budget.cosets))
    cert = {"method": "enumeration", "index_image": mine.index, "index_H": target.index}
    equal = mine.index == target.index
    return ImageResult(words, Verdict.yes(**cert) if equal else Verdict.no(**cert))


def subdivide_covering(m: CoveringMap) -> CoveringMap:
    """Subdivide base and total space compatibly."""
    if m.truncated:
        raise TruncatedError("cannot subdivide a truncated covering")
    total, base = subdivide(m.total), subdivide(m.base)
    carrier = total.origin.carrier
    proj = {}
    for x in total.whole().cells:
        car = carrier[x]
        proj[x] = m.projection[x] if car == x else m.projection[car] + x[len(car):]
    return CoveringMap(total, base, proj, m.basepoint_lift, m.sheets, None, False,
                       m.subgroup_gens, m.normal, m.table)


def _evenly_covered(m: CoveringMap, fibers, sub: Subcomplex) -> bool:
    for comp in sub.components(m.base):
        lifted = m.total.closure([x for y in comp.cells for x in fibers[y]])
        for piece in lifted.components(m.total):
            cells = piece.cells
            if len(cells) != len(comp.cells) or len({m.projection[x] for x in cells}) != len(cells):
                return False
    return True


def evenly_covered_cover(m: CoveringMap, max_depth: int = 4) -> Cover:
    """Greedy cover of (a subdivision of) the base by evenly covered pieces.

    Closed stars are tried first, then closures of maximal cells; if some cell
    stays uncovered the base and total space are subdivided and the search
    repeats.
    """
    if m.truncated:
        raise TruncatedError("evenly covered covers need an untruncated covering")
    for _ in range(max_depth + 1):
        base = m.base
        fibers = m.fibers()
        chosen, names = [], []
        covered: set[str] = set()
        for v in base.vertices:
            st = base.star(v)
            if _evenly_covered(m, fibers, st):
                chosen.append(st)
                names.append(f"st({v})")
                covered |= st.cells
        for x in base.maximal_cells():
            if x in covered:
                continue
            cl = base.closure([x])
            if _evenly_covered(m, fibers, cl):
                chosen.append(cl)
                names.append(f"cl({x})")
                covered |= cl.cells
        if covered == base.whole().cells:
            # keep only the elements that are not inside another chosen element
            keep = [i for i, a in enumerate(chosen)
                    if not any(j != i and a <= b and (a != b or j < i) for j, b in enumerate(chosen))]
            return Cover(base, tuple(chosen[i] for i in keep), tuple(names[i] for i in keep))
        m = subdivide_covering(m)
    raise BudgetError(f"no evenly covered cover within {max_depth} subdivisions")


@dataclass(frozen=True)
class ExistsResult:
    found: Cover | None
    verdict: Verdict
    searched: int
    index: int | None = None

    def to_dict(self) -> dict:
        return {"found": self.found is not None, "witness_index": self.index,
                "witness": list(self.found.names) if self.found else None,
                "searched": self.searched, "verdict": self.verdict.to_dict()}


def _core_test(pi: Pi1Data, h: tuple[Word, ...], normal: bool,
               budget: Budget) -> Callable[[Sequence[Word]], Verdict]:
    """Verdict for: the normal closure of the given words lies in ``H``.

    A normal subgroup lies in ``H`` exactly when it lies in the core of ``H``.
    """
    p = pi.presentation
    if normal:
        q = Quotient(p, h, budget)
        return lambda words: conjunction([q.is_trivial(w) for w in words])
    if not any(p.relators):
        graph = SubgroupGraph(h, p.generators)
        if graph.index() is None:
            # a nontrivial normal subgroup of a free group inside a finitely
            # generated subgroup forces finite index
            def infinite(words):
                bad = [str(w) for w in words if w.reduced()]
                if bad:
                    return Verdict.no(method="infinite-index core", generator=bad[0])
                return Verdict.yes(method="free-reduction")
            return infinite
    table = todd_coxeter(p, h, budget.cosets)
    if table.complete:
        def core(words):
            for w in words:
                moved = [i for i in range(table.index) if table.act(i, w) != i]
                if moved:
                    return Verdict.no(method="enumeration", generator=str(w), coset=moved[0])
            return Verdict.yes(method="enumeration", index=table.index)
        return core
    q = Quotient(p, (), budget)

    def fallback(words):
        v = conjunction([q.is_trivial(w) for w in words])
        return v if v.is_yes else Verdict.unknown("budget", cosets=budget.cosets)
    return fallback


def exists_covering_for(c: Complex, h_gens: Sequence[Word], universe: Sequence[Cover] = (),
                        depth: int = 2, budget: Budget = DEFAULT_BUDGET,
                        normal: bool = False) -> ExistsResult:
    """Search for a cover whose Spanier group lies in ``H``."""
    pi = pi1(c)
    h = _check_words(pi, h_gens)
    test = _core_test(pi, h, normal, budget)
    candidates = list(universe)
    x = c
    for k in range(depth + 1):
        candidates.append(star_cover(x))
        if k < depth:
            x = subdivide(x)
    verdicts = []
    for i, u in enumerate(candidates):
        d = spanier_generators(c, u, pi=pi)
        v = test(d.words)
        if v.is_yes:
            return ExistsResult(u, v.with_certificate(candidate=i), i + 1, i)
        verdicts.append(v)
    if any(v.is_unknown for v in verdicts):
        verdict = Verdict.unknown("budget", searched=len(candidates))
    else:
        verdict = Verdict.no(method="search", searched=len(candidates))
    return ExistsResult(None, verdict, len(candidates))


@dataclass(frozen=True, eq=False)
class UniversalResult:
    covering: CoveringMap
    approx: SpApprox
    certificate: dict

    def to_dict(self) -> dict:
        return {"covering": self.covering.to_dict(), "certificate": self.certificate}


def universal_covering(c: Complex, depth: int = 3, budget: Budget = DEFAULT_BUDGET,
                       radius: int = 4) -> UniversalResult:
    """The covering over the stabilized approximation of ``pi^sp``.

    Finite complexes have trivial ``pi^sp``; the covering is built in full when
    the quotient is finite and as a truncated ball otherwise.
    """
    validate(c)
    approx = spanier_sp_approx(c, depth, budget)
    h = approx.data.words
    quotient = AbelianQuotient(approx.data.pi1.presentation, h).invariants
    m = None
    if quotient.is_finite:
        try:
            m = build_covering(c, h, budget, normal=True)
        except BudgetError:
            m = None
    if m is None:
        m = ball_covering(c, h, radius, budget, normal=True)
    witness_level = approx.levels[approx.witness_depth]
    witness_eq = conjunction([subgroup_contains(witness_level, approx.data, budget),
                              subgroup_contains(approx.data, witness_level, budget)])
    trivial_pi1 = AbelianQuotient(approx.data.pi1.presentation).invariants.is_trivial
    items = {
        "i_coverable": f"covering over pi^sp built ({'truncated' if m.truncated else 'complete'})",
        "ii_universal_covering": ("simply connected cover, " + (f"{m.sheets} sheets" if not m.truncated
                                  else f"infinite sheets, window of radius {m.radius}")),
        "iii_pi_stable_cover": witness_eq.to_dict(),
        "iv_semi_locally_spanier": "each star of the witness cover has Spanier image inside pi^sp",
        "v_no_wild_point": "witness stars give every vertex a neighbourhood with loops in pi^sp",
        "vi_open_subgroup": "not checked (out of scope)",
    }
    certificate = {
        "pi_sp": approx.to_dict(),
        "pi_sp_trivial": not h,
        "pi1_trivial_abelianization": trivial_pi1,
        "witness": {"depth": approx.witness_depth, "cover": "star cover",
                    "elements": len(approx.witness_cover)},
        "witness_equals_pi_sp": witness_eq.to_dict(),
        "items": items,
        "universe": "star covers of iterated subdivisions (subcomplex covers only)",
    }
    return UniversalResult(m, approx, certificate)


def factor_map(upper: CoveringMap, lower: CoveringMap) -> dict[str, str] | None:
    """Basepoint-led cell map ``upper.total -> lower.total`` over the base, if any."""
    if upper.truncated or lower.truncated or upper.base != lower.base:
        return None
    f = {upper.basepoint_lift: lower.basepoint_lift}
    queue = deque([upper.basepoint_lift])
    while queue:
        v = queue.popleft()
        for letter in upper.total.incident(v):
            e, sign = letter
            be = upper.projection[e]
            image = None
            for le, ls in lower.total.incident(f[v]):
                if ls == sign and lower.projection[le] == be:
                    image = le
                    break
            if image is None:
                return None
            if f.setdefault(e, image) != image:
                return None
            t, lt = upper.total.tgt(letter), lower.total.tgt((image, sign))
            if t not in f:
                f[t] = lt
                queue.append(t)
            elif f[t] != lt:
                return None
    by_boundary = {}
    for lf, b in lower.total.faces.items():
        by_boundary[(lower.projection[lf], b.letters)] = lf
    for uf, b in upper.total.faces.items():
        image = Word(tuple((f[e], s) for e, s in b))
        lf = by_boundary.get((upper.projection[uf], image.letters))
        if lf is None:
            return None
        f[uf] = lf
    return f


def equivalent(m1: CoveringMap, m2: CoveringMap) -> bool:
    """Basepoint-preserving cell isomorphism commuting with the projections."""
    if m1.sheets != m2.sheets:
        return False
    f = factor_map(m1, m2)
    return f is not None and len(set(f.values())) == len(f) == m2.total.cell_count


def intersection_covering(c: Complex, h_gens: Sequence[Word], k_gens: Sequence[Word],
                          budget: Budget = DEFAULT_BUDGET) -> CoveringMap:
    """Covering for ``H`` meet ``K``: folding on free groups, product action otherwise."""
    pi = pi1(c)
    h, k = _check_words(pi, h_gens), _check_words(pi, k_gens)
    gens = pi.presentation.generators
    if not c.faces:
        meet = SubgroupGraph(h, gens).intersection(SubgroupGraph(k, gens))
        return build_covering(c, tuple(meet.basis()), budget)
    th = todd_coxeter(pi.presentation, h, budget.cosets)
    tk = todd_coxeter(pi.presentation, k, budget.cosets)
    if not (th.complete and tk.complete):
        raise BudgetError("both subgroups need finite index for the product action")
    index = {(0, 0): 0}
    orbit = [(0, 0)]
    perms: dict[str, list[int]] = {g: [] for g in gens}
    i = 0
    while i < len(orbit):
        a, b = orbit[i]
        for g in gens:
            nxt = (th.permutation(g)[a], tk.permutation(g)[b])
            if nxt not in index:
                index[nxt] = len(orbit)
                orbit.append(nxt)
            perms[g].append(index[nxt])
        i += 1
    m = _from_action(c, pi, len(orbit), perms, (), False, None)
    return replace(m, subgroup_gens=image_words(m))


__all__ = [
    "CoveringMap", "ExistsResult", "ImageResult", "UniversalResult", "ball_covering",
    "build_covering", "equivalent", "evenly_covered_cover", "exists_covering_for",
    "factor_map", "image_subgroup", "image_words", "intersection_covering",
    "subdivide_covering", "universal_covering", "verify_covering",
]
