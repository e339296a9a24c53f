"""Generator-eliminating Tietze simplification."""

from __future__ import annotations

from .words import Presentation, Word


def _canonical(r: Word) -> tuple:
    """Key identifying a cyclic word up to rotation and inversion."""
    letters = r.letters
    if not letters:
        return ()
    variants = []
    for w in (letters, (~r).letters):
        variants.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(variants)


def simplify(p: Presentation, max_length: int = 400) -> tuple[Presentation, dict[str, Word]]:
    """Eliminate generators that occur exactly once in some relator.

    Returns the simplified presentation and, for every original generator, a
    word in the surviving generators that it equals. Only eliminations are
    performed, so the survivors are a subset of the original generators.
    """
    gens = list(p.generators)
    images: dict[str, Word] = {g: Word(((g, 1),)) for g in gens}
    rels: list[Word] = []
    seen = set()
    for r in p.relators:
        r = r.cyclically_reduced()
        key = _canonical(r)
        if r and key not in seen:
            seen.add(key)
            rels.append(r)

    while True:
        choice = None
        for ri, r in sorted(enumerate(rels), key=lambda t: (len(t[1]), t[0])):
            counts: dict[str, int] = {}
            for s, _ in r:
                counts[s] = counts.get(s, 0) + 1
            once = [s for s in gens if counts.get(s) == 1]
            if once:
                choice = (ri, once[0])
                break
        if choice is None:
            break
        ri, g = choice
        r = rels[ri]
        pos = next(i for i, (s, _) in enumerate(r) if s == g)
        rotated = r[pos + 1:] * r[:pos]   # r ~ g^e * rotated
        e = r[pos][1]
        # g^e * rotated = 1  =>  g = rotated^-1 (e=1) or rotated (e=-1)
        value = (~rotated if e == 1 else rotated).reduced()
        new_rels = []
        seen = set()
        too_long = False
        for k, other in enumerate(rels):
            if k == ri:
                continue
            other = other.substitute({g: value}).cyclically_reduced()
            if len(other) > max_length:
                too_long = True
                break
            key = _canonical(other)
            if other and key not in seen:
                seen.add(key)
                new_rels.append(other)
        if too_long:
            break
        rels = new_rels
        gens.remove(g)
        images = {h: w.substitute({g: value}).reduced() for h, w in images.items()}
    return Presentation(tuple(gens), tuple(rels)), images
