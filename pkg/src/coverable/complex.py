"""Finite combinatorial 2-complexes, subcomplexes, covers, subdivision, wedges.

Edge paths are :class:`~coverable.fpgroup.Word` objects over edge ids, so a
signed edge is just a letter ``(edge_id, +1 | -1)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (DanglingError, DisconnectedError, DuplicateCellError, NotCoverError,
                     OpenBoundaryError, PathEndpointsError)
from .fpgroup import Word

VERTEX, EDGE, FACE = "vertex", "edge", "face"


@dataclass(frozen=True)
class Origin:
    """How a complex sits over the complex it was derived from.

    ``vertex_image`` sends each vertex to a parent vertex; ``edge_image`` sends
    each edge ``u -> v`` to a parent edge path from the image of ``u`` to the
    image of ``v``, homotopic to the edge after composing with fixed tails.
    ``carrier`` names the parent cell each new cell lies inside.
    """

    parent: "Complex"
    vertex_image: Mapping[str, str]
    edge_image: Mapping[str, Word]
    carrier: Mapping[str, str]


@dataclass(frozen=True, eq=False)
class Complex:
    vertices: tuple[str, ...]
    edges: Mapping[str, tuple[str, str]]
    faces: Mapping[str, Word]
    basepoint: str
    tags: Mapping[str, int] = field(default_factory=dict)
    origin: Origin | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", MappingProxyType(
            {str(e): (str(s), str(t)) for e, (s, t) in dict(self.edges).items()}))
        faces = {}
        for f, b in dict(self.faces).items():
            faces[str(f)] = b if isinstance(b, Word) else Word.parse(b)
        object.__setattr__(self, "faces", MappingProxyType(faces))
        object.__setattr__(self, "tags", MappingProxyType(dict(self.tags)))

    # structural equality ignores tags and origin
    def _key(self):
        return (frozenset(self.vertices), frozenset(self.edges.items()),
                frozenset((f, b.letters) for f, b in self.faces.items()), self.basepoint)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Complex(vertices={len(self.vertices)}, edges={len(self.edges)}, "
                f"faces={len(self.faces)}, basepoint={self.basepoint!r})")

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    @property
    def cell_count(self) -> int:
        return sum(self.counts)

    def kind(self, cell: str) -> str | None:
        if cell in self.edges:
            return EDGE
        if cell in self.faces:
            return FACE
        if cell in self._vertex_set:
            return VERTEX
        return None

    @property
    def _vertex_set(self) -> frozenset[str]:
        vs = self.__dict__.get("_vs")
        if vs is None:
            vs = frozenset(self.vertices)
            object.__setattr__(self, "_vs", vs)
        return vs

    def src(self, letter) -> str:
        e, sign = letter
        s, t = self.edges[e]
        return s if sign == 1 else t

    def tgt(self, letter) -> str:
        e, sign = letter
        s, t = self.edges[e]
        return t if sign == 1 else s

    def face_vertices(self, f: str) -> list[str]:
        return [self.src(l) for l in self.faces[f]]

    def face_start(self, f: str) -> str:
        b = self.faces[f]
        return self.src(b[0]) if b else self.basepoint

    def incident(self, v: str) -> list[tuple[str, int]]:
        """Signed edges leaving ``v``, sorted by edge id (loops appear twice)."""
        inc = self.__dict__.get("_inc")
        if inc is None:
            inc = {u: [] for u in self.vertices}
            for e in sorted(self.edges):
                s, t = self.edges[e]
                if s in inc:
                    inc[s].append((e, 1))
                if t in inc:
                    inc[t].append((e, -1))
            object.__setattr__(self, "_inc", inc)
        return inc.get(v, [])

    def with_basepoint(self, v: str) -> "Complex":
        return Complex(self.vertices, self.edges, self.faces, v, self.tags, self.origin)

    def whole(self) -> "Subcomplex":
        return Subcomplex(frozenset(self.vertices), frozenset(self.edges), frozenset(self.faces))

    def closure(self, cells: Iterable[str]) -> "Subcomplex":
        vs, es, fs = set(), set(), set()
        for c in cells:
            k = self.kind(c)
            if k is None:
                raise DanglingError(f"unknown cell {c!r}")
            if k == FACE:
                fs.add(c)
                for e, _ in self.faces[c]:
                    es.add(e)
            elif k == EDGE:
                es.add(c)
            else:
                vs.add(c)
        for e in es:
            vs.update(self.edges[e])
        return Subcomplex(frozenset(vs), frozenset(es), frozenset(fs))

    def _faces_at(self) -> dict[str, list[str]]:
        fa = self.__dict__.get("_fa")
        if fa is None:
            fa = {u: [] for u in self.vertices}
            for f in self.faces:
                for u in dict.fromkeys(self.face_vertices(f)):
                    fa[u].append(f)
            object.__setattr__(self, "_fa", fa)
        return fa

    def star(self, v: str) -> "Subcomplex":
        """Closed star: the closure of every cell containing ``v``."""
        cells = [v] + sorted({e for e, _ in self.incident(v)})
        cells += self._faces_at().get(v, [])
        return self.closure(cells)

    def maximal_cells(self) -> list[str]:
        """Cells not lying in the boundary of another cell."""
        in_face = {e for b in self.faces.values() for e, _ in b}
        used = {x for e in self.edges.values() for x in e}
        return ([v for v in self.vertices if v not in used]
                + [e for e in self.edges if e not in in_face] + list(self.faces))

    def restrict(self, sub: "Subcomplex", basepoint: str | None = None) -> "Complex":
        """The subcomplex as a complex in its own right."""
        return Complex(tuple(v for v in self.vertices if v in sub.vertices),
                       {e: self.edges[e] for e in self.edges if e in sub.edges},
                       {f: self.faces[f] for f in self.faces if f in sub.faces},
                       basepoint if basepoint is not None else self.basepoint,
                       {c: t for c, t in self.tags.items() if c in sub.cells})

    def path_end(self, start: str, path: Word) -> str:
        v = start
        for letter in path:
            if letter[0] not in self.edges:
                raise PathEndpointsError(f"unknown edge {letter[0]!r}")
            if self.src(letter) != v:
                raise PathEndpointsError(f"path breaks at {letter[0]!r}: not leaving {v!r}")
            v = self.tgt(letter)
        return v


@dataclass(frozen=True)
class Subcomplex:
    vertices: frozenset[str] = frozenset()
    edges: frozenset[str] = frozenset()
    faces: frozenset[str] = frozenset()

    @property
    def cells(self) -> frozenset[str]:
        return self.vertices | self.edges | self.faces

    def __bool__(self) -> bool:
        return bool(self.vertices or self.edges or self.faces)

    def __le__(self, other: "Subcomplex") -> bool:
        return (self.vertices <= other.vertices and self.edges <= other.edges
                and self.faces <= other.faces)

    def __and__(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.vertices & other.vertices, self.edges & other.edges,
                          self.faces & other.faces)

    def __or__(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(self.vertices | other.vertices, self.edges | other.edges,
                          self.faces | other.faces)

    def is_closed_in(self, c: Complex) -> bool:
        if not (self.vertices <= c._vertex_set and all(e in c.edges for e in self.edges)
                and all(f in c.faces for f in self.faces)):
            return False
        if any(e not in self.edges for f in self.faces for e, _ in c.faces[f]):
            return False
        return all(x in self.vertices for e in self.edges for x in c.edges[e])

    def components(self, c: Complex) -> list["Subcomplex"]:
        """Connected components, ordered by their smallest vertex id."""
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            s, t = c.edges[e]
            adj[s].append(t)
            adj[t].append(s)
        comp: dict[str, int] = {}
        groups: list[set[str]] = []
        for v in sorted(self.vertices):
            if v in comp:
                continue
            comp[v] = len(groups)
            group = {v}
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in comp:
                        comp[w] = comp[v]
                        group.add(w)
                        queue.append(w)
            groups.append(group)
        out = []
        for i, group in enumerate(groups):
            es = frozenset(e for e in self.edges if comp[c.edges[e][0]] == i)
            fs = frozenset(f for f in self.faces if c.faces[f] and comp[c.face_start(f)] == i)
            out.append(Subcomplex(frozenset(group), es, fs))
        return out


@dataclass(frozen=True, eq=False)
class Cover:
    """An ordered family of closed subcomplexes whose union is the whole complex."""

    complex: Complex
    elements: tuple[Subcomplex, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        names = tuple(self.names) or tuple(f"U{i}" for i in range(len(elements)))
        if len(names) != len(elements):
            raise ValueError("one name per cover element")
        object.__setattr__(self, "names", names)
        for name, el in zip(names, elements):
            if not el.is_closed_in(self.complex):
                raise NotCoverError(f"element {name} is not a closed subcomplex")
        union = Subcomplex()
        for el in elements:
            union = union | el
        missing = self.complex.whole().cells - union.cells
        if missing:
            raise NotCoverError(f"cells not covered: {', '.join(sorted(missing))}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def same_elements(self, other: "Cover") -> bool:
        return set(self.elements) == set(other.elements)


@dataclass(frozen=True)
class EdgeLoop:
    base: str
    edges: Word = Word()

    def check(self, c: Complex) -> None:
        end = c.path_end(self.base, self.edges)
        if end != self.base:
            raise PathEndpointsError(f"loop at {self.base!r} ends at {end!r}")

    def __mul__(self, other: "EdgeLoop") -> "EdgeLoop":
        return EdgeLoop(self.base, self.edges * other.edges)

    def __invert__(self) -> "EdgeLoop":
        return EdgeLoop(self.base, ~self.edges)

    def __len__(self):
        return len(self.edges)


# ---------------------------------------------------------------------------


def validate(c: Complex) -> None:
    seen: dict[str, str] = {}
    for kind, ids in ((VERTEX, c.vertices), (EDGE, c.edges), (FACE, c.faces)):
        for i in ids:
            if i in seen:
                raise DuplicateCellError(f"id {i!r} used for a {seen[i]} and a {kind}")
            seen[i] = kind
    if c.basepoint not in c._vertex_set:
        raise DanglingError(f"basepoint {c.basepoint!r} is not a vertex")
    for e, (s, t) in c.edges.items():
        for x in (s, t):
            if x not in c._vertex_set:
                raise DanglingError(f"edge {e!r} references undeclared vertex {x!r}")
    for f, b in c.faces.items():
        for e, _ in b:
            if e not in c.edges:
                raise DanglingError(f"face {f!r} references undeclared edge {e!r}")
        if not b:
            raise OpenBoundaryError(f"face {f!r} has an empty boundary")
        for l1, l2 in zip(b, b[1:] * b[:1]):
            if c.tgt(l1) != c.src(l2):
                raise OpenBoundaryError(f"face {f!r} boundary breaks after {l1[0]!r}")
    if len(c.whole().components(c)) != 1:
        raise DisconnectedError("the 1-skeleton is not connected")


def _sub_id(parent: str, suffix: str) -> str:
    return f"{parent}/{suffix}"


def subdivide(c: Complex) -> Complex:
    """Bisect every edge and cone every face from a new centre vertex.

    Edge ``e: u -> v`` becomes ``e/0: u -> e/m`` and ``e/1: e/m -> v``. A face
    whose boundary has ``L`` edges gets centre ``f/c``, radial edges
    ``f/r<i>`` to the ``2L`` boundary positions and triangles ``f/t<i>``.
    """
    validate(c)
    vertices = list(c.vertices)
    edges: dict[str, tuple[str, str]] = {}
    faces: dict[str, Word] = {}
    vimg: dict[str, str] = {v: v for v in c.vertices}
    eimg: dict[str, Word] = {}
    carrier: dict[str, str] = {v: v for v in c.vertices}
    for e, (s, t) in c.edges.items():
        m = _sub_id(e, "m")
        vertices.append(m)
        vimg[m] = s
        carrier[m] = e
        e0, e1 = _sub_id(e, "0"), _sub_id(e, "1")
        edges[e0] = (s, m)
        edges[e1] = (m, t)
        eimg[e0] = Word()
        eimg[e1] = Word(((e, 1),))
        carrier[e0] = carrier[e1] = e
    for f, b in c.faces.items():
        centre = _sub_id(f, "c")
        vertices.append(centre)
        carrier[centre] = f
        positions: list[str] = []
        halves: list[tuple[str, int]] = []
        images: list[Word] = []     # parent path from the first corner to vimg[position]
        prefix = Word()
        for letter in b:
            e, sign = letter
            m = _sub_id(e, "m")
            positions += [c.src(letter), m]
            if sign == 1:
                halves += [(_sub_id(e, "0"), 1), (_sub_id(e, "1"), 1)]
                images += [prefix, prefix]
            else:
                halves += [(_sub_id(e, "1"), -1), (_sub_id(e, "0"), -1)]
                images += [prefix, prefix * Word((letter,))]
            prefix = prefix * Word((letter,))
        vimg[centre] = positions[0]
        n = len(positions)
        radials = []
        for i, p in enumerate(positions):
            r = _sub_id(f, f"r{i}")
            edges[r] = (centre, p)
            eimg[r] = images[i]
            carrier[r] = f
            radials.append(r)
        for i in range(n):
            t = _sub_id(f, f"t{i}")
            faces[t] = Word(((radials[i], 1), halves[i], (radials[(i + 1) % n], -1)))
            carrier[t] = f
    tags = {x: c.tags[carrier[x]] for x in carrier if carrier[x] in c.tags}
    out = Complex(tuple(vertices), edges, faces, c.basepoint, tags,
                  Origin(c, vimg, eimg, carrier))
    validate(out)
    return out


def subdivide_n(c: Complex, k: int) -> Complex:
    for _ in range(k):
        c = subdivide(c)
    return c


def push_path(c: Complex, path: Word, ancestor: Complex) -> Word:
    """Map an edge path of ``c`` down the origin chain to ``ancestor``.

    Loops at a vertex shared with the ancestor map to homotopic loops.
    """
    while c is not ancestor and c != ancestor:
        if c.origin is None:
            raise ValueError("ancestor not found on the origin chain")
        img = c.origin.edge_image
        out = Word()
        for e, sign in path:
            out = out * (img[e] if sign == 1 else ~img[e])
        path = out.reduced()
        c = c.origin.parent
    return path


def carrier_in(c: Complex, cell: str, ancestor: Complex) -> str:
    while c is not ancestor and c != ancestor:
        if c.origin is None:
            raise ValueError("ancestor not found on the origin chain")
        cell = c.origin.carrier[cell]
        c = c.origin.parent
    return cell


def descends_from(c: Complex, ancestor: Complex) -> bool:
    while True:
        if c is ancestor or c == ancestor:
            return True
        if c.origin is None:
            return False
        c = c.origin.parent


def star_cover(c: Complex) -> Cover:
    return Cover(c, tuple(c.star(v) for v in c.vertices),
                 tuple(f"st({v})" for v in c.vertices))


def cell_cover(c: Complex) -> Cover:
    """One element per maximal cell: the closure of that cell."""
    cells = c.maximal_cells()
    return Cover(c, tuple(c.closure([x]) for x in cells), tuple(f"cl({x})" for x in cells))


def intersect_covers(u: Cover, v: Cover) -> Cover:
    """Pairwise intersections; empty, repeated and strictly contained ones are dropped.

    A dropped element lies inside a kept one, so the Spanier group is unchanged.
    """
    if u.complex != v.complex:
        raise NotCoverError("covers of different complexes")
    elements: dict[Subcomplex, str] = {}
    for a, na in zip(u, u.names):
        for b, nb in zip(v, v.names):
            el = a & b
            if el and el not in elements:
                elements[el] = f"{na}&{nb}"
    kept = {el: name for el, name in elements.items()
            if not any(el != other and el <= other for other in elements)}
    return Cover(u.complex, tuple(kept), tuple(kept.values()))


def refines(v: Cover, u: Cover) -> bool:
    return all(any(a <= b for b in u) for a in v)


def lift_cover(u: Cover, target: Complex) -> Cover:
    """Pull ``u`` back to a subdivision ``target`` of its complex."""
    if not descends_from(target, u.complex):
        raise NotCoverError("target is not a subdivision of the cover's complex")
    carriers = {x: carrier_in(target, x, u.complex) for x in target.whole().cells}
    elements = []
    for el in u:
        cells = {x for x, car in carriers.items() if car in el.cells}
        elements.append(target.closure(cells))
    return Cover(target, tuple(elements), u.names)


def wedge(c1: Complex, c2: Complex) -> Complex:
    """One-point union identifying the two basepoints.

    Cells keep their ids unless the id also occurs in the other factor, in
    which case it is prefixed with ``1:`` or ``2:``. Non-basepoint cells are
    tagged with their factor number.
    """
    validate(c1)
    validate(c2)
    return _wedge_with_maps(c1, c2)[0]


def _wedge_with_maps(c1: Complex, c2: Complex):
    b1, b2 = c1.basepoint, c2.basepoint
    base = b1 if b1 == b2 else f"{b1}|{b2}"
    cells = (c1.whole().cells - {b1}, c2.whole().cells - {b2})
    maps: list[dict[str, str]] = []
    for i, (cx, own, other) in enumerate(((c1, cells[0], cells[1]), (c2, cells[1], cells[0])), 1):
        m = {cx.basepoint: base}
        for x in own:
            m[x] = f"{i}:{x}" if (x in other or x == base) else x
        maps.append(m)
    vertices = [base]
    edges: dict[str, tuple[str, str]] = {}
    faces: dict[str, Word] = {}
    tags: dict[str, int] = {}
    for i, (cx, m) in enumerate(((c1, maps[0]), (c2, maps[1])), 1):
        for v in cx.vertices:
            if v != cx.basepoint:
                vertices.append(m[v])
                tags[m[v]] = i
        for e, (s, t) in cx.edges.items():
            edges[m[e]] = (m[s], m[t])
            tags[m[e]] = i
        for f, b in cx.faces.items():
            faces[m[f]] = Word(tuple((m[e], sgn) for e, sgn in b))
            tags[m[f]] = i
    return Complex(tuple(vertices), edges, faces, base, tags), maps[0], maps[1]
