"""Words over signed symbols and finite presentations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

Letter = tuple[str, int]


def _parse_token(token: str) -> list[Letter]:
    if token == "1":
        return []
    sym, sep, exp = token.partition("^")
    if not sym:
        raise ValueError(f"bad word token {token!r}")
    if not sep:
        return [(sym, 1)]
    try:
        n = int(exp)
    except ValueError:
        raise ValueError(f"bad exponent in {token!r}") from None
    sign = 1 if n > 0 else -1
    return [(sym, sign)] * abs(n)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters ``(symbol, +1 | -1)``.

    Words are *not* reduced on construction; use :meth:`reduced`.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((str(s), int(e)) for s, e in self.letters)
        for s, e in letters:
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {e} for {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"a b^-1 a^2"``; the token ``1`` is the empty word."""
        letters: list[Letter] = []
        for token in text.split():
            letters.extend(_parse_token(token))
        return cls(tuple(letters))

    @classmethod
    def of(cls, *symbols: str) -> "Word":
        return cls.parse(" ".join(symbols))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(s if e == 1 else f"{s}^-1" for s, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        return Word(self.letters * n)

    def reduced(self) -> "Word":
        out: list[Letter] = []
        for s, e in self.letters:
            if out and out[-1] == (s, -e):
                out.pop()
            else:
                out.append((s, e))
        return Word(tuple(out))

    def cyclically_reduced(self) -> "Word":
        letters = self.reduced().letters
        i, j = 0, len(letters) - 1
        while i < j and letters[i] == (letters[j][0], -letters[j][1]):
            i += 1
            j -= 1
        return Word(letters[i:j + 1])

    def is_reduced(self) -> bool:
        return all(a != (b[0], -b[1]) for a, b in zip(self.letters, self.letters[1:]))

    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def exponent_sums(self, generators: Iterable[str]) -> list[int]:
        index = {g: i for i, g in enumerate(generators)}
        sums = [0] * len(index)
        for s, e in self.letters:
            sums[index[s]] += e
        return sums

    def substitute(self, images: Mapping[str, "Word"]) -> "Word":
        """Replace each symbol by its image; symbols without an image stay."""
        out: list[Letter] = []
        for s, e in self.letters:
            image = images.get(s)
            if image is None:
                out.append((s, e))
            else:
                out.extend(image.letters if e == 1 else (~image).letters)
        return Word(tuple(out))

    def drop(self, symbols) -> "Word":
        """Delete every letter whose symbol is in ``symbols``."""
        return Word(tuple(l for l in self.letters if l[0] not in symbols))


def free_reduce(w: Word) -> Word:
    return w.reduced()


def commutator(x: Word, y: Word) -> Word:
    return x * y * ~x * ~y


@dataclass(frozen=True)
class Presentation:
    """``<generators | relators>`` with freely reduced relators."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generators in {gens}")
        known = set(gens)
        rels = []
        for r in self.relators:
            r = r if isinstance(r, Word) else Word.parse(r)
            extra = r.symbols() - known
            if extra:
                raise ValueError(f"relator {r} uses unknown symbols {sorted(extra)}")
            rels.append(r.reduced())
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def parse(cls, generators: str, *relators: str) -> "Presentation":
        return cls(tuple(generators.split()), tuple(Word.parse(r) for r in relators))

    def with_relators(self, extra: Iterable[Word]) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(extra))

    def check_word(self, w: Word) -> None:
        extra = w.symbols() - set(self.generators)
        if extra:
            raise ValueError(f"word {w} uses symbols {sorted(extra)} outside {self.generators}")

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators if r)
        return f"< {' '.join(self.generators)} | {rels} >"
