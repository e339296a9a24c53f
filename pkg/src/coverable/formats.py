"""Line-oriented text formats for complexes, covers and covering maps.

Complex files::

    # a disc
    vertex x
    edge a x x
    face D a
    basepoint x
    subcomplex U
    cells a
    cover whole = U

Listed cells of a subcomplex are closed under incidence. Covering files are
complex files for the total space with a header line ``sheets n`` or
``truncated r`` and ``project <total-cell> <base-cell>`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import Complex, Cover, Subcomplex, validate
from .errors import ComplexError, CoverableError, NotCoverError, ParseError
from .fpgroup import Word


@dataclass
class ComplexFile:
    complex: Complex
    subcomplexes: dict[str, Subcomplex] = field(default_factory=dict)
    covers: dict[str, Cover] = field(default_factory=dict)
    header: dict[str, int] = field(default_factory=dict)
    projection: dict[str, str] = field(default_factory=dict)


def _signed(token: str, lineno: int) -> tuple[str, int]:
    if token.endswith("^-1"):
        return token[:-3], -1
    if "^" in token:
        raise ParseError(f"bad signed edge {token!r}", lineno)
    return token, 1


def parse_complex(text: str) -> ComplexFile:
    vertices: list[str] = []
    edges: dict[str, tuple[str, str]] = {}
    faces: dict[str, Word] = {}
    basepoint = None
    sub_cells: dict[str, list[str]] = {}
    sub_line: dict[str, int] = {}
    cover_specs: list[tuple[str, list[str], int]] = []
    header: dict[str, int] = {}
    projection: dict[str, str] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "vertex" and len(rest) == 1:
            vertices.append(rest[0])
        elif key == "edge" and len(rest) == 3:
            if rest[0] in edges:
                raise ParseError(f"duplicate edge {rest[0]!r}", lineno)
            edges[rest[0]] = (rest[1], rest[2])
        elif key == "face" and len(rest) >= 2:
            if rest[0] in faces:
                raise ParseError(f"duplicate face {rest[0]!r}", lineno)
            faces[rest[0]] = Word(tuple(_signed(t, lineno) for t in rest[1:]))
        elif key == "basepoint" and len(rest) == 1:
            basepoint = rest[0]
        elif key == "subcomplex" and len(rest) == 1:
            current = rest[0]
            sub_cells.setdefault(current, [])
            sub_line[current] = lineno
        elif key == "cells" and rest:
            if current is None:
                raise ParseError("'cells' outside a subcomplex block", lineno)
            sub_cells[current].extend(rest)
        elif key == "cover" and len(rest) >= 3 and rest[1] == "=":
            cover_specs.append((rest[0], rest[2:], lineno))
        elif key in ("sheets", "truncated") and len(rest) == 1 and rest[0].isdigit():
            header[key] = int(rest[0])
        elif key == "project" and len(rest) == 2:
            projection[rest[0]] = rest[1]
        else:
            raise ParseError(f"cannot parse {line!r}", lineno)
    if len(set(vertices)) != len(vertices):
        raise ParseError("duplicate vertex id", 0)
    if basepoint is None:
        if not vertices:
            raise ParseError("no vertices declared", 0)
        basepoint = vertices[0]
    c = Complex(tuple(vertices), edges, faces, basepoint)
    validate(c)
    subs = {}
    for name, cells in sub_cells.items():
        try:
            subs[name] = c.closure(cells)
        except ComplexError as exc:
            raise ParseError(f"subcomplex {name}: {exc}", sub_line[name]) from exc
    covers = {}
    for name, members, lineno in cover_specs:
        missing = [m for m in members if m not in subs]
        if missing:
            raise ParseError(f"cover {name} names unknown subcomplexes {missing}", lineno)
        try:
            covers[name] = Cover(c, tuple(subs[m] for m in members), tuple(members))
        except NotCoverError as exc:
            raise NotCoverError(f"cover {name} (line {lineno}): {exc}") from exc
    return ComplexFile(c, subs, covers, header, projection)


def load_complex(path) -> ComplexFile:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def _word_tokens(w: Word) -> str:
    return " ".join(e if s == 1 else f"{e}^-1" for e, s in w)


def dump_complex(c: Complex, covers: dict[str, Cover] | None = None) -> str:
    lines = [f"vertex {v}" for v in c.vertices]
    lines += [f"edge {e} {s} {t}" for e, (s, t) in c.edges.items()]
    lines += [f"face {f} {_word_tokens(b)}" for f, b in c.faces.items()]
    lines.append(f"basepoint {c.basepoint}")
    for cname, cover in (covers or {}).items():
        names = []
        for i, (el, name) in enumerate(zip(cover, cover.names)):
            sub = f"{cname}.{i}"
            names.append(sub)
            lines.append(f"subcomplex {sub}  # {name}")
            lines.append("cells " + " ".join(sorted(el.cells)))
        lines.append(f"cover {cname} = " + " ".join(names))
    return "\n".join(lines) + "\n"


def dump_covering(m) -> str:
    """Serialize a :class:`~coverable.covering.CoveringMap`."""
    head = f"truncated {m.radius}" if m.truncated else f"sheets {m.sheets}"
    body = dump_complex(m.total.with_basepoint(m.basepoint_lift))
    proj = [f"project {x} {y}" for x, y in m.projection.items()]
    return head + "\n" + body + "\n".join(proj) + "\n"


def parse_covering(text: str, base: Complex):
    from .covering import CoveringMap

    parsed = parse_complex(text)
    if "sheets" not in parsed.header and "truncated" not in parsed.header:
        raise ParseError("covering file needs a 'sheets' or 'truncated' header", 1)
    for x, y in parsed.projection.items():
        if parsed.complex.kind(x) is None or base.kind(y) is None:
            raise CoverableError(f"project line names unknown cell {x!r} -> {y!r}")
    truncated = "truncated" in parsed.header
    return CoveringMap(total=parsed.complex, base=base, projection=parsed.projection,
                       basepoint_lift=parsed.complex.basepoint,
                       sheets=None if truncated else parsed.header["sheets"],
                       radius=parsed.header.get("truncated"), truncated=truncated)
