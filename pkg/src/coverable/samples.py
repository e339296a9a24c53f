"""Built-in complexes and seeded random generators for property checks."""

from __future__ import annotations

import random

from .complex import (Complex, Cover, EdgeLoop, Subcomplex, cell_cover, lift_cover, star_cover,
                      subdivide, validate)
from .errors import CoverableError
from .fpgroup import Word


def circle() -> Complex:
    return Complex(("x",), {"a": ("x", "x")}, {}, "x")


def disc() -> Complex:
    return Complex(("x",), {"a": ("x", "x")}, {"D": Word.parse("a")}, "x")


def theta() -> Complex:
    edges = {"a": ("x", "y"), "b": ("x", "y"), "c": ("x", "y")}
    return Complex(("x", "y"), edges, {}, "x")


def wedge2() -> Complex:
    return Complex(("x",), {"a": ("x", "x"), "b": ("x", "x")}, {}, "x")


def z3() -> Complex:
    """A circle with a face wrapping three times around it."""
    return Complex(("x",), {"a": ("x", "x")}, {"D": Word.parse("a a a")}, "x")


BUILTINS = {"circle": circle, "disc": disc, "theta": theta, "wedge2": wedge2, "z3": z3}


def builtin(name: str) -> Complex:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise CoverableError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None


def _closed_walk(c: Complex, start: str, length: int, rng: random.Random) -> Word | None:
    """A random reduced walk from ``start`` closed by a shortest return."""
    path, v = [], start
    for _ in range(length):
        options = [l for l in c.incident(v) if not path or l != (path[-1][0], -path[-1][1])]
        if not options:
            break
        letter = rng.choice(options)
        path.append(letter)
        v = c.tgt(letter)
    back = _shortest(c, v, start)
    w = (Word(tuple(path)) * back).reduced()
    return w if w else None


def _shortest(c: Complex, src: str, dst: str) -> Word:
    prev = {src: None}
    queue = [src]
    for v in queue:
        if v == dst:
            break
        for letter in c.incident(v):
            t = c.tgt(letter)
            if t not in prev:
                prev[t] = (v, letter)
                queue.append(t)
    out = []
    v = dst
    while prev[v] is not None:
        v, letter = prev[v]
        out.append(letter)
    return Word(tuple(reversed(out)))


def random_complex(rng: random.Random, max_cells: int = 12) -> Complex:
    """Connected complex with at most ``max_cells`` cells, rooted at ``v0``."""
    while True:
        nv = rng.randint(1, 3)
        vertices = tuple(f"v{i}" for i in range(nv))
        edges = {}
        for i in range(1, nv):
            j = rng.randrange(i)
            edges[f"e{len(edges)}"] = (vertices[j], vertices[i]) if rng.random() < 0.5 else (vertices[i], vertices[j])
        for _ in range(rng.randint(0, 3)):
            edges[f"e{len(edges)}"] = (rng.choice(vertices), rng.choice(vertices))
        c = Complex(vertices, edges, {}, "v0")
        faces = {}
        for _ in range(rng.randint(0, 2)):
            w = _closed_walk(c, rng.choice(vertices), rng.randint(1, 3), rng)
            if w is not None:
                faces[f"f{len(faces)}"] = w
        c = Complex(vertices, edges, faces, "v0")
        if 0 < c.cell_count <= max_cells:
            validate(c)
            return c


def random_cover(c: Complex, rng: random.Random) -> Cover:
    kind = rng.randrange(4)
    if kind == 0:
        return Cover(c, (c.whole(),), ("whole",))
    if kind == 1:
        return star_cover(c)
    if kind == 2:
        return cell_cover(c)
    elements = _random_grouping(c, c.maximal_cells(), rng)
    return Cover(c, elements, tuple(f"G{i}" for i in range(len(elements))))


def _random_grouping(c: Complex, cells, rng: random.Random) -> tuple[Subcomplex, ...]:
    cells = sorted(cells)
    rng.shuffle(cells)
    groups: list[list[str]] = []
    for x in cells:
        if groups and rng.random() < 0.5:
            rng.choice(groups).append(x)
        else:
            groups.append([x])
    return tuple(c.closure(g) for g in groups)


def random_refinement(u: Cover, rng: random.Random) -> Cover:
    """A cover refining ``u``, on the same complex or on its subdivision."""
    c = u.complex
    if rng.random() < 0.3:
        c = subdivide(c)
        u = lift_cover(u, c)
    elements, names = [], []
    for i, el in enumerate(u):
        maximal = [x for x in el.cells
                   if not any(x in c.closure([y]).cells and x != y for y in el.cells)]
        for j, sub in enumerate(_random_grouping(c, maximal, rng)):
            elements.append(sub)
            names.append(f"{u.names[i]}.{j}")
    return Cover(c, tuple(elements), tuple(names))


def random_path(c: Complex, rng: random.Random, max_length: int = 4) -> Word:
    path, v = [], c.basepoint
    for _ in range(rng.randint(0, max_length)):
        options = c.incident(v)
        if not options:
            break
        letter = rng.choice(options)
        path.append(letter)
        v = c.tgt(letter)
    return Word(tuple(path))


def random_loop(c: Complex, rng: random.Random, max_length: int = 6) -> EdgeLoop:
    w = _closed_walk(c, c.basepoint, rng.randint(0, max_length), rng)
    return EdgeLoop(c.basepoint, w or Word())


__all__ = [
    "BUILTINS", "builtin", "circle", "disc", "random_complex", "random_cover", "random_loop",
    "random_path", "random_refinement", "theta", "wedge2", "z3",
]
